// evaluation.cpp
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

#include "wordseg/evaluation.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace wordseg {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t pos) {
  return std::binary_search(sorted.begin(), sorted.end(), pos);
}

std::size_t count_inside(const std::vector<std::size_t>& sorted,
                         std::size_t begin, std::size_t end) {
  auto lo = std::upper_bound(sorted.begin(), sorted.end(), begin);
  auto hi = std::lower_bound(sorted.begin(), sorted.end(), end);
  return lo < hi ? static_cast<std::size_t>(hi - lo) : 0;
}

std::vector<std::string> words_in(const std::string& letters,
                                  const std::vector<std::size_t>& boundaries,
                                  std::size_t begin, std::size_t end) {
  std::vector<std::string> out;
  std::size_t start = begin;
  for (auto it = std::upper_bound(boundaries.begin(), boundaries.end(), begin);
       it != boundaries.end() && *it < end; ++it) {
    out.push_back(letters.substr(start, *it - start));
    start = *it;
  }
  out.push_back(letters.substr(start, end - start));
  return out;
}

// Letters [from, to) with a space at every boundary, and a caret line under
// the letters of [mark_begin, mark_end).
std::pair<std::string, std::string> underline(
    const std::string& letters, const std::vector<std::size_t>& boundaries,
    std::size_t from, std::size_t to, std::size_t mark_begin,
    std::size_t mark_end) {
  std::string text, marks;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from && contains(boundaries, i)) {
      text.push_back(' ');
      marks.push_back(i > mark_begin && i < mark_end ? '^' : ' ');
    }
    text.push_back(letters[i]);
    marks.push_back(i >= mark_begin && i < mark_end ? '^' : ' ');
  }
  while (!marks.empty() && marks.back() == ' ') marks.pop_back();
  return {text, marks};
}

}  // namespace

Segmentation::Segmentation(std::string letters,
                           std::vector<std::size_t> boundaries)
    : letters_(std::move(letters)), boundaries_(std::move(boundaries)) {
  std::sort(boundaries_.begin(), boundaries_.end());
  boundaries_.erase(std::unique(boundaries_.begin(), boundaries_.end()),
                    boundaries_.end());
  for (std::size_t b : boundaries_) {
    if (b == 0 || b >= letters_.size())
      throw std::invalid_argument("boundary outside the letter stream");
  }
}

Segmentation Segmentation::from_words(const std::vector<std::string>& words) {
  std::string letters;
  std::vector<std::size_t> boundaries;
  for (const std::string& w : words) {
    if (w.empty()) continue;
    if (!letters.empty()) boundaries.push_back(letters.size());
    letters += w;
  }
  return Segmentation(std::move(letters), std::move(boundaries));
}

std::vector<std::string> Segmentation::words() const {
  if (letters_.empty()) return {};
  return words_in(letters_, boundaries_, 0, letters_.size());
}

const char* to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::kMerge: return "merge";
    case ErrorClass::kSplit: return "split";
    case ErrorClass::kMixed: return "mixed";
  }
  return "mixed";
}

EvalReport compare(const Segmentation& pred, const Segmentation& gold) {
  if (pred.letters() != gold.letters())
    throw std::invalid_argument(
        "predicted and gold segmentations cover different letters");

  const auto& pb = pred.boundaries();
  const auto& gb = gold.boundaries();
  std::vector<std::size_t> agreed;
  std::set_intersection(pb.begin(), pb.end(), gb.begin(), gb.end(),
                        std::back_inserter(agreed));

  EvalReport r;
  r.predicted_boundaries = pb.size();
  r.gold_boundaries = gb.size();
  r.correct_boundaries = agreed.size();
  r.precision = pb.empty() ? 1.0
                           : static_cast<double>(agreed.size()) /
                                 static_cast<double>(pb.size());
  r.recall = gb.empty() ? 1.0
                        : static_cast<double>(agreed.size()) /
                              static_cast<double>(gb.size());
  r.f1 = r.precision + r.recall > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;

  const std::string& letters = gold.letters();
  const std::size_t n = letters.size();
  if (n == 0) return r;

  // Gold words recovered exactly.
  std::size_t start = 0;
  for (std::size_t i = 0; i <= gb.size(); ++i) {
    const std::size_t end = i < gb.size() ? gb[i] : n;
    ++r.gold_words;
    const bool left = start == 0 || contains(pb, start);
    const bool right = end == n || contains(pb, end);
    if (left && right && count_inside(pb, start, end) == 0) ++r.matched_words;
    start = end;
  }
  r.word_accuracy = static_cast<double>(r.matched_words) /
                    static_cast<double>(r.gold_words);

  // Maximal disagreeing spans between consecutive agreed boundaries.
  std::vector<std::size_t> fences;
  fences.push_back(0);
  fences.insert(fences.end(), agreed.begin(), agreed.end());
  fences.push_back(n);
  for (std::size_t i = 0; i + 1 < fences.size(); ++i) {
    const std::size_t a = fences[i], b = fences[i + 1];
    const std::size_t in_pred = count_inside(pb, a, b);
    const std::size_t in_gold = count_inside(gb, a, b);
    if (in_pred == 0 && in_gold == 0) continue;
    SegmentError e;
    e.begin = a;
    e.end = b;
    e.predicted = words_in(letters, pb, a, b);
    e.gold = words_in(letters, gb, a, b);
    e.kind = in_pred == 0   ? ErrorClass::kMerge
             : in_gold == 0 ? ErrorClass::kSplit
                            : ErrorClass::kMixed;
    r.errors.push_back(std::move(e));
  }
  return r;
}

void write_report_text(std::ostream& os, const EvalReport& report,
                       const Segmentation& pred, const Segmentation& gold) {
  os << "boundary_precision: " << report.precision << '\n'
     << "boundary_recall: " << report.recall << '\n'
     << "boundary_f1: " << report.f1 << '\n'
     << "word_accuracy: " << report.word_accuracy << '\n'
     << "predicted_boundaries: " << report.predicted_boundaries << '\n'
     << "gold_boundaries: " << report.gold_boundaries << '\n'
     << "correct_boundaries: " << report.correct_boundaries << '\n'
     << "boundary_errors: " << report.boundary_errors() << '\n'
     << "errors: " << report.errors.size() << '\n';

  const std::string& letters = gold.letters();
  constexpr std::size_t kContext = 12;
  for (std::size_t i = 0; i < report.errors.size(); ++i) {
    const SegmentError& e = report.errors[i];
    const std::size_t from = e.begin > kContext ? e.begin - kContext : 0;
    const std::size_t to = std::min(letters.size(), e.end + kContext);

    const auto [gtext, gmarks] =
        underline(letters, gold.boundaries(), from, to, e.begin, e.end);
    const auto [ptext, pmarks] =
        underline(letters, pred.boundaries(), from, to, e.begin, e.end);
    os << "error " << (i + 1) << ": " << to_string(e.kind) << " at [" << e.begin
       << ", " << e.end << ")\n"
       << "  gold: " << gtext << '\n'
       << "        " << gmarks << '\n'
       << "  pred: " << ptext << '\n'
       << "        " << pmarks << '\n';
  }
}

void write_report_json(std::ostream& os, const EvalReport& report) {
  nlohmann::json j;
  j["boundary_precision"] = report.precision;
  j["boundary_recall"] = report.recall;
  j["boundary_f1"] = report.f1;
  j["word_accuracy"] = report.word_accuracy;
  j["predicted_boundaries"] = report.predicted_boundaries;
  j["gold_boundaries"] = report.gold_boundaries;
  j["correct_boundaries"] = report.correct_boundaries;
  j["boundary_errors"] = report.boundary_errors();
  j["errors"] = nlohmann::json::array();
  for (const SegmentError& e : report.errors) {
    j["errors"].push_back({{"begin", e.begin},
                           {"end", e.end},
                           {"class", to_string(e.kind)},
                           {"predicted", e.predicted},
                           {"gold", e.gold}});
  }
  os << j.dump(2) << '\n';
}

}  // namespace wordseg
