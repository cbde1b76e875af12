// trellis.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The wordseg Authors.
//
// \file
// The event window: a ring of columns forming a sawtooth Viterbi trellis.
//
// Column c holds the valid sequences ending at stream position c; cell i is
// the suffix of length i + 1. A path through the window is a segmentation
// into valid sequences. First-level scores are per-cell Viterbi path
// probabilities; second-level scores rank whole segmentations by the
// learned average word scores.

#ifndef WORDSEG_TRELLIS_HPP_
#define WORDSEG_TRELLIS_HPP_

#include <span>
#include <string>
#include <vector>

#include "wordseg/config.hpp"
#include "wordseg/sequence_memory.hpp"

namespace wordseg {

struct Cell {
  SequenceId seq = kNoSequence;
  float score = 0.0f;
};

struct Column {
  char event = 0;
  int num_cells = 0;
  /// Length of the selected word ending here (1-based).
  int best_length = 1;
  float best_score = 0.0f;
  std::vector<Cell> cells;  // sized to the window capacity

  std::span<const Cell> active() const {
    return {cells.data(), static_cast<std::size_t>(num_cells)};
  }
};

/// Builds `out` for `event` from the previous column's cells. Updates every
/// counter the new letter touches, including in_count of junk children past
/// the first threshold failure. Returns the number of valid cells.
int populate_column(SequenceMemory& memory, const EngineConfig& cfg,
                    std::span<Cell> prev_cells, char event, Column& out);

/// Integer power by repeated squaring in float, rounding after every step.
float pow_int(float base, int exponent);

/// Result of one detachment pass, oldest word first.
struct Detachment {
  std::vector<std::string> words;
  bool forced = false;  ///< single letter pushed out of a full window
};

class EventWindow {
 public:
  explicit EventWindow(const EngineConfig& cfg);

  /// Forget all columns; the next append starts a fresh one-column window.
  void reset();
  bool empty() const { return head_ < 0; }

  /// Adds a column for `event`. On an empty window this creates the first
  /// column and sets the width to one; otherwise the width is unchanged
  /// (see widen()).
  void append_column(char event, SequenceMemory& memory);

  /// Increments the logical width and returns it.
  int widen() { return ++num_columns_; }

  /// First-level Viterbi scores for the head column. Requires a previous
  /// column. Records the survivor predecessor length on the previous column
  /// and credits the normalized new-word score to its sequence.
  void score_first_level(SequenceMemory& memory);

  /// Second-level dynamic program over every column except the head.
  void score_second_level(const SequenceMemory& memory);

  /// Detaches the words whose right edge is more than min_columns / 2
  /// columns behind the head, then realigns the new left edge.
  Detachment detach_words(const SequenceMemory& memory);

  int num_columns() const { return num_columns_; }
  int capacity() const { return static_cast<int>(ring_.size()); }
  int min_columns() const { return min_columns_; }
  void set_min_columns(int n) { min_columns_ = n; }

  /// Column `offset` steps left of the head (0 is the head). The offset may
  /// reach num_columns(), which is the ring slot left of the window.
  const Column& column(int offset) const { return ring_[slot(offset)]; }
  Column& column(int offset) { return ring_[slot(offset)]; }
  const Column& head() const { return column(0); }

  /// Letters currently held, oldest first.
  std::string letters() const;

 private:
  int slot(int offset) const {
    const int cap = capacity();
    return ((head_ - offset) % cap + cap) % cap;
  }

  EngineConfig cfg_;
  std::vector<Column> ring_;
  int head_ = -1;
  int num_columns_ = 0;
  int min_columns_;
};

}  // namespace wordseg

#endif  // WORDSEG_TRELLIS_HPP_
