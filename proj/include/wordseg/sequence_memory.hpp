// sequence_memory.hpp
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
// Trie of observed letter sequences with per-sequence statistics.
//
// Every sequence is a node in one of 26 trees rooted at the letters a..z.
// A node stores only its last letter and a link to its predecessor; the
// successor of (X, x) is found through a chained hash table.

#ifndef WORDSEG_SEQUENCE_MEMORY_HPP_
#define WORDSEG_SEQUENCE_MEMORY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wordseg/config.hpp"

namespace wordseg {

/// Allocation number of a stored sequence. Roots a..z are 1..26.
using SequenceId = std::uint32_t;
inline constexpr SequenceId kNoSequence = 0;

inline constexpr int kAlphabetSize = 26;
inline constexpr std::uint32_t kHashBuckets = 12577;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

struct SequenceRecord {
  SequenceId id = kNoSequence;
  char event = 0;                ///< last letter of the sequence
  std::uint32_t length = 0;
  SequenceId prev = kNoSequence; ///< kNoSequence for roots
  std::uint32_t create_count = 0;
  std::uint32_t in_count = 0;    ///< observed instances
  std::uint32_t out_count = 0;   ///< valid (firing) instances
  std::uint32_t succ_count = 0;  ///< sum of children's out_count
  float accum_scores = 0.0f;     ///< accumulated first-level word scores

  bool is_root() const { return prev == kNoSequence; }
};

struct MemoryStats {
  std::uint32_t alloc_count = 0;  ///< records ever created, roots included
  std::uint32_t fire_count = 0;   ///< records whose out_count left zero
  std::uint32_t event_count = 0;  ///< letters consumed
};

/// ELF hash over the five bytes (event, prev.event, prev.length, low and high
/// byte of prev.id), reduced modulo kHashBuckets.
std::uint32_t hash_index(const SequenceRecord& prev, char event);

/// Biased frequency test. Roots are not subject to it; callers skip them.
/// A record created at the current event (zero elapsed events) never passes.
bool passes_threshold(const SequenceRecord& seq, std::uint32_t event_count,
                      const EngineConfig& cfg);

/// accum_scores / in_count, in float.
inline float average_word_score(const SequenceRecord& seq) {
  return seq.accum_scores / static_cast<float>(seq.in_count);
}

class SequenceMemory {
 public:
  SequenceMemory();

  /// Root when prev == kNoSequence, otherwise the child (prev + event),
  /// created with zeroed counters on a miss. Throws std::invalid_argument
  /// for letters outside a..z or an unknown prev.
  SequenceId next_sequence(SequenceId prev, char event);

  /// Child lookup without creation; kNoSequence on a miss.
  SequenceId find(SequenceId prev, char event) const;

  static SequenceId root_id(char event) {
    return static_cast<SequenceId>(event - 'a' + 1);
  }

  const SequenceRecord& operator[](SequenceId id) const {
    return records_[id - 1];
  }
  SequenceRecord& operator[](SequenceId id) { return records_[id - 1]; }

  bool contains(SequenceId id) const {
    return id != kNoSequence && id <= records_.size();
  }

  /// Letters of the sequence, reconstructed through the prev chain.
  std::string letters(SequenceId id) const;

  const std::vector<SequenceRecord>& records() const { return records_; }

  const MemoryStats& stats() const { return stats_; }

  std::uint32_t event_count() const { return stats_.event_count; }
  void count_event() { ++stats_.event_count; }
  void count_fire() { ++stats_.fire_count; }

  /// Tab-separated dump, one record per line: id, letters, create_count,
  /// in_count, out_count, succ_count, accum_scores.
  void dump(std::ostream& os) const;

 private:
  std::vector<SequenceRecord> records_;
  // Bucket heads and per-record chain links, both as ids.
  std::vector<SequenceId> buckets_;
  std::vector<SequenceId> links_;
  MemoryStats stats_;
};

}  // namespace wordseg

#endif  // WORDSEG_SEQUENCE_MEMORY_HPP_
