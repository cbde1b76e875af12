// sequence_memory.cpp
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

#include "wordseg/sequence_memory.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace wordseg {

std::uint32_t hash_index(const SequenceRecord& prev, char event) {
  const std::array<std::uint8_t, 5> bytes = {
      static_cast<std::uint8_t>(event),
      static_cast<std::uint8_t>(prev.event),
      static_cast<std::uint8_t>(prev.length),
      static_cast<std::uint8_t>(prev.id & 0xFFu),
      static_cast<std::uint8_t>((prev.id >> 8) & 0xFFu)};
  std::uint32_t h = 0;
  for (std::uint8_t b : bytes) {
    h = (h << 4) + b;
    const std::uint32_t g = h & 0xF0000000u;
    if (g != 0) h ^= g >> 24;
    h &= ~g;
  }
  return h % kHashBuckets;
}

bool passes_threshold(const SequenceRecord& seq, std::uint32_t event_count,
                      const EngineConfig& cfg) {
  const std::uint32_t elapsed = event_count - seq.create_count;
  if (elapsed == 0) return false;
  const float numerator = static_cast<float>(seq.in_count) - cfg.bias;
  const float freq = numerator / static_cast<float>(elapsed);
  return !(freq < cfg.threshold_prob);
}

SequenceMemory::SequenceMemory() : buckets_(kHashBuckets, kNoSequence) {
  records_.reserve(1024);
  links_.reserve(1024);
  for (int i = 0; i < kAlphabetSize; ++i) {
    SequenceRecord root;
    root.id = static_cast<SequenceId>(i + 1);
    root.event = static_cast<char>('a' + i);
    root.length = 1;
    records_.push_back(root);
    links_.push_back(kNoSequence);
  }
  stats_.alloc_count = kAlphabetSize;
}

SequenceId SequenceMemory::find(SequenceId prev, char event) const {
  if (!is_letter(event)) return kNoSequence;
  if (prev == kNoSequence) return root_id(event);
  if (!contains(prev)) return kNoSequence;
  for (SequenceId p = buckets_[hash_index((*this)[prev], event)];
       p != kNoSequence; p = links_[p - 1]) {
    const SequenceRecord& r = (*this)[p];
    if (r.prev == prev && r.event == event) return p;
  }
  return kNoSequence;
}

SequenceId SequenceMemory::next_sequence(SequenceId prev, char event) {
  if (!is_letter(event))
    throw std::invalid_argument("sequence letter outside a-z");
  if (prev == kNoSequence) return root_id(event);
  if (!contains(prev))
    throw std::invalid_argument("unknown predecessor sequence");

  const std::uint32_t bucket = hash_index((*this)[prev], event);
  for (SequenceId p = buckets_[bucket]; p != kNoSequence; p = links_[p - 1]) {
    const SequenceRecord& r = (*this)[p];
    if (r.prev == prev && r.event == event) return p;
  }

  SequenceRecord rec;
  rec.id = static_cast<SequenceId>(records_.size() + 1);
  rec.event = event;
  rec.length = (*this)[prev].length + 1;
  rec.prev = prev;
  rec.create_count = stats_.event_count;
  records_.push_back(rec);
  links_.push_back(buckets_[bucket]);
  buckets_[bucket] = rec.id;
  ++stats_.alloc_count;
  return rec.id;
}

std::string SequenceMemory::letters(SequenceId id) const {
  std::string out;
  for (SequenceId p = id; p != kNoSequence; p = (*this)[p].prev)
    out.push_back((*this)[p].event);
  std::reverse(out.begin(), out.end());
  return out;
}

void SequenceMemory::dump(std::ostream& os) const {
  for (const SequenceRecord& r : records_) {
    os << r.id << '\t' << letters(r.id) << '\t' << r.create_count << '\t'
       << r.in_count << '\t' << r.out_count << '\t' << r.succ_count << '\t'
       << r.accum_scores << '\n';
  }
}

}  // namespace wordseg
