// segmenter.hpp
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
// On-line segmentation session.
//
// A session owns one sequence memory and one event window. Letters are fed
// one at a time; in learning mode only the statistics move, in output mode
// words are detached from the left edge of the window as soon as enough
// right context has arrived. Most events emit nothing.
//
// Note that flush() injects a sentinel letter into the statistics, exactly
// like the reference engine. Sessions meant for further learning after a
// flush will see that extra letter counted.

#ifndef WORDSEG_SEGMENTER_HPP_
#define WORDSEG_SEGMENTER_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordseg/config.hpp"
#include "wordseg/sequence_memory.hpp"
#include "wordseg/trellis.hpp"

namespace wordseg {

enum class Mode { kLearning, kOutput };

struct Emission {
  enum class Kind { kWord, kForcedChar, kOverflow, kBatchEnd };
  Kind kind = Kind::kWord;
  std::string letters;  // empty for markers

  static Emission word(std::string w) { return {Kind::kWord, std::move(w)}; }
  static Emission forced(std::string w) {
    return {Kind::kForcedChar, std::move(w)};
  }
  static Emission overflow() { return {Kind::kOverflow, {}}; }
  static Emission batch_end() { return {Kind::kBatchEnd, {}}; }

  bool operator==(const Emission&) const = default;
};

class Session {
 public:
  /// Validates the config; throws std::invalid_argument on bad values.
  explicit Session(const EngineConfig& cfg);

  /// Switching to output mode resets the window; memory is kept.
  void set_mode(Mode mode);
  Mode mode() const { return mode_; }

  /// Feeds one letter. Throws std::invalid_argument outside a..z.
  std::vector<Emission> process_event(char event);

  /// Feeds every letter of `text` and concatenates the emissions.
  std::vector<Emission> process(std::string_view text);

  /// Output mode only. Drops min_columns to zero for the rest of the
  /// session and feeds the flush sentinel. The sentinel stays in the window.
  std::vector<Emission> flush();

  const EngineConfig& config() const { return cfg_; }
  const MemoryStats& stats() const { return memory_.stats(); }
  const SequenceMemory& memory() const { return memory_; }
  const EventWindow& window() const { return window_; }

  /// When set, one line per event describing the new head column.
  void set_trace(std::ostream* os) { trace_ = os; }

 private:
  void trace_head() const;

  EngineConfig cfg_;
  SequenceMemory memory_;
  EventWindow window_;
  Mode mode_ = Mode::kLearning;
  std::ostream* trace_ = nullptr;
};

/// Renders emissions with the reference framing: words separated by a
/// space, a newline per detachment batch, '+' for window overflow and '-'
/// before a forced-out letter.
std::string render_replica(std::span<const Emission> emissions);

/// Words only, one space between them, no markers.
std::string render_clean(std::span<const Emission> emissions);

/// The trailing statistics block of a replica run.
std::string render_stats(const MemoryStats& stats, std::size_t sample_words,
                         std::size_t sample_chars);

/// Words and forced letters in emission order, markers dropped.
std::vector<std::string> emitted_words(std::span<const Emission> emissions);

}  // namespace wordseg

#endif  // WORDSEG_SEGMENTER_HPP_
