// trellis.cpp
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

#include "wordseg/trellis.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordseg {

int populate_column(SequenceMemory& memory, const EngineConfig& cfg,
                    std::span<Cell> prev_cells, char event, Column& out) {
  if (!is_letter(event))
    throw std::invalid_argument("event letter outside a-z");
  const int capacity = static_cast<int>(out.cells.size());

  memory.count_event();
  const SequenceId root = memory.next_sequence(kNoSequence, event);
  memory[root].in_count += 1;
  memory[root].out_count += 1;
  out.event = event;
  out.cells[0] = Cell{root, 0.0f};
  out.num_cells = 1;

  std::size_t i = 0;
  for (; i < prev_cells.size(); ++i) {
    const SequenceId parent = prev_cells[i].seq;
    const SequenceId child = memory.next_sequence(parent, event);
    SequenceRecord& rec = memory[child];
    rec.in_count += 1;
    if (!passes_threshold(rec, memory.event_count(), cfg)) break;

    if (rec.out_count == 0) memory.count_fire();
    rec.out_count += 1;
    memory[parent].succ_count += 1;
    if (out.num_cells + 1 >= capacity)
      throw std::logic_error("event window column overflow");
    out.cells[out.num_cells++] = Cell{child, 0.0f};
  }

  // Probable junk: only the observation counts move, so that a few of
  // these can still become valid later.
  for (++i; i < prev_cells.size(); ++i) {
    const SequenceId child = memory.next_sequence(prev_cells[i].seq, event);
    memory[child].in_count += 1;
  }
  return out.num_cells;
}

float pow_int(float base, int exponent) {
  unsigned n = exponent >= 0 ? static_cast<unsigned>(exponent)
                             : static_cast<unsigned>(-exponent);
  for (float z = 1.0f;; base *= base) {
    if (n & 1u) z *= base;
    if ((n >>= 1) == 0) return exponent < 0 ? 1.0f / z : z;
  }
}

EventWindow::EventWindow(const EngineConfig& cfg)
    : cfg_(cfg), min_columns_(cfg.min_columns) {
  ring_.resize(static_cast<std::size_t>(cfg.window_capacity));
  for (Column& c : ring_) c.cells.resize(ring_.size());
}

void EventWindow::reset() {
  head_ = -1;
  num_columns_ = 0;
}

void EventWindow::append_column(char event, SequenceMemory& memory) {
  if (empty()) {
    head_ = 0;
    num_columns_ = 1;
    populate_column(memory, cfg_, {}, event, ring_[0]);
    return;
  }
  const int prev_slot = head_;
  head_ = (head_ + 1) % capacity();
  Column& prev = ring_[static_cast<std::size_t>(prev_slot)];
  Column& out = ring_[static_cast<std::size_t>(head_)];
  populate_column(memory, cfg_,
                  std::span<Cell>(prev.cells.data(),
                                  static_cast<std::size_t>(prev.num_cells)),
                  event, out);
}

void EventWindow::score_first_level(SequenceMemory& memory) {
  Column& col = column(1);
  Column& head = column(0);
  std::vector<Cell>& in = col.cells;
  std::vector<Cell>& out = head.cells;

  const float frac = static_cast<float>(memory[out[0].seq].in_count) /
                     static_cast<float>(memory.event_count());
  float sum = 0.0f;
  for (int ix = 0; ix < col.num_cells; ++ix) {
    const SequenceRecord& in_seq = memory[in[ix].seq];
    float score = in[ix].score;
    const float end_of_word =
        static_cast<float>(in_seq.out_count - in_seq.succ_count);
    const float p_new =
        frac * end_of_word / static_cast<float>(in_seq.out_count);

    if (ix + 1 < head.num_cells) {
      const SequenceRecord& out_seq = memory[out[ix + 1].seq];
      // Not clamped at zero.
      const float p_same = static_cast<float>(out_seq.out_count) /
                               static_cast<float>(in_seq.out_count) -
                           p_new;
      out[ix + 1].score = score * p_same;
      sum += out[ix + 1].score;
    }
    score *= p_new;
    if (ix == 0 || out[0].score < score) {
      out[0].score = score;
      col.best_length = ix + 1;
    }
  }

  if (sum != 0.0f) {
    sum += out[0].score;
    for (int jx = 0; jx < head.num_cells; ++jx) out[jx].score /= sum;
  } else {
    out[0].score = 1.0f;
  }

  memory[in[col.best_length - 1].seq].accum_scores += out[0].score;
}

void EventWindow::score_second_level(const SequenceMemory& memory) {
  const int n = num_columns_;
  column(n).best_score = 1.0f;
  for (int k = 1; k < n; ++k) {
    Column& col = column(n - k);
    if (col.num_cells > k)
      throw std::logic_error("column crosses the window's left edge");
    for (int jx = 0; jx < col.num_cells; ++jx) {
      const float before = column(n - k + 1 + jx).best_score;
      const float word = average_word_score(memory[col.cells[jx].seq]);
      const float score = before * pow_int(word, jx + 1);
      if (jx == 0 || col.best_score < score) {
        col.best_score = score;
        col.best_length = jx + 1;
      }
    }
  }
}

Detachment EventWindow::detach_words(const SequenceMemory& memory) {
  // Word ends collected right to left.
  std::vector<SequenceId> stack;
  for (int offset = 1; offset < num_columns_;) {
    const Column& col = column(offset);
    const int len = col.best_length;
    if (offset > min_columns_ / 2) stack.push_back(col.cells[len - 1].seq);
    offset += len;
  }

  Detachment result;
  if (stack.empty()) {
    if (num_columns_ != capacity()) return result;
    result.forced = true;
    stack.push_back(column(num_columns_ - 1).cells[0].seq);
  }

  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    num_columns_ -= static_cast<int>(memory[*it].length);
    result.words.push_back(memory.letters(*it));
  }

  // Truncate sequences that reach across the new left edge.
  for (int len = 1, offset = num_columns_ - 1;
       len <= num_columns_ && column(offset).num_cells > len;
       ++len, --offset) {
    Column& col = column(offset);
    col.num_cells = len;
    col.best_length = std::min(col.best_length, len);
  }
  return result;
}

std::string EventWindow::letters() const {
  std::string out;
  for (int offset = num_columns_ - 1; offset >= 0; --offset)
    out.push_back(column(offset).event);
  return out;
}

}  // namespace wordseg
