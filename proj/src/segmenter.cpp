// segmenter.cpp
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

#include "wordseg/segmenter.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wordseg {

Session::Session(const EngineConfig& cfg)
    : cfg_((cfg.validate(), cfg)), window_(cfg_) {}

void Session::set_mode(Mode mode) {
  if (mode == mode_) return;
  mode_ = mode;
  if (mode_ == Mode::kOutput) window_.reset();
}

std::vector<Emission> Session::process_event(char event) {
  if (!is_letter(event))
    throw std::invalid_argument("input letter outside a-z");

  std::vector<Emission> out;
  if (window_.empty()) {
    window_.append_column(event, memory_);
    trace_head();
    return out;
  }

  window_.append_column(event, memory_);
  window_.score_first_level(memory_);
  trace_head();
  if (mode_ == Mode::kLearning) return out;

  const int width = window_.widen();
  if (width <= window_.min_columns()) return out;

  if (window_.min_columns() != 0) {
    if (width != window_.capacity()) {
      // Survivor predecessor of the new-word path into the head column.
      const Column& prev = window_.column(1);
      const SequenceRecord& seq =
          memory_[prev.cells[prev.best_length - 1].seq];
      if (average_word_score(seq) < cfg_.gate_score) return out;
    } else {
      out.push_back(Emission::overflow());
    }
  }

  if (cfg_.second_level) window_.score_second_level(memory_);
  Detachment d = window_.detach_words(memory_);
  if (d.words.empty()) return out;
  if (d.forced) {
    out.push_back(Emission::forced(std::move(d.words.front())));
  } else {
    for (std::string& w : d.words) out.push_back(Emission::word(std::move(w)));
  }
  out.push_back(Emission::batch_end());
  return out;
}

std::vector<Emission> Session::process(std::string_view text) {
  std::vector<Emission> out;
  for (char c : text) {
    std::vector<Emission> e = process_event(c);
    out.insert(out.end(), std::make_move_iterator(e.begin()),
               std::make_move_iterator(e.end()));
  }
  return out;
}

std::vector<Emission> Session::flush() {
  if (mode_ != Mode::kOutput)
    throw std::logic_error("flush requires output mode");
  window_.set_min_columns(0);
  return process_event(cfg_.flush_sentinel);
}

void Session::trace_head() const {
  if (trace_ == nullptr) return;
  const Column& head = window_.head();
  std::ostream& os = *trace_;
  os << memory_.event_count() << '\t' << head.event;
  for (const Cell& c : head.active())
    os << '\t' << memory_[c.seq].length << ':' << c.score;
  os << '\n';
}

std::string render_replica(std::span<const Emission> emissions) {
  std::string out;
  bool need_space = false;
  for (const Emission& e : emissions) {
    switch (e.kind) {
      case Emission::Kind::kWord:
        if (need_space) out.push_back(' ');
        out += e.letters;
        need_space = true;
        break;
      case Emission::Kind::kForcedChar:
        out.push_back('-');
        out += e.letters;
        need_space = true;
        break;
      case Emission::Kind::kOverflow:
        out.push_back('+');
        break;
      case Emission::Kind::kBatchEnd:
        out.push_back('\n');
        need_space = false;
        break;
    }
  }
  return out;
}

std::string render_clean(std::span<const Emission> emissions) {
  std::string out;
  for (const std::string& w : emitted_words(emissions)) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string render_stats(const MemoryStats& stats, std::size_t sample_words,
                         std::size_t sample_chars) {
  std::ostringstream os;
  os << "\nSEQUENCES STORED = " << stats.alloc_count
     << "\nSEQUENCES FIRING = " << stats.fire_count
     << "\nTOTAL EVENT COUNT = " << stats.event_count
     << "\nSAMPLE LENGTH = " << sample_words << " words, " << sample_chars
     << " chars\n";
  return os.str();
}

std::vector<std::string> emitted_words(std::span<const Emission> emissions) {
  std::vector<std::string> words;
  for (const Emission& e : emissions) {
    if (e.kind == Emission::Kind::kWord ||
        e.kind == Emission::Kind::kForcedChar)
      words.push_back(e.letters);
  }
  return words;
}

}  // namespace wordseg
