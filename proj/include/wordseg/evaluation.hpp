// evaluation.hpp
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

#ifndef WORDSEG_EVALUATION_HPP_
#define WORDSEG_EVALUATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace wordseg {

/// A letter stream plus its internal word boundaries. Position b splits the
/// stream between letters b - 1 and b; 0 and size() are implicit.
class Segmentation {
 public:
  Segmentation() = default;
  /// Boundaries are sorted and deduplicated; throws std::invalid_argument
  /// for positions outside (0, letters.size()).
  Segmentation(std::string letters, std::vector<std::size_t> boundaries);

  static Segmentation from_words(const std::vector<std::string>& words);

  const std::string& letters() const { return letters_; }
  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::vector<std::string> words() const;

 private:
  std::string letters_;
  std::vector<std::size_t> boundaries_;
};

enum class ErrorClass { kMerge, kSplit, kMixed };

const char* to_string(ErrorClass c);

/// One maximal span [begin, end) bounded by agreed boundaries inside which
/// the two segmentations disagree.
struct SegmentError {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::string> predicted;
  std::vector<std::string> gold;
  ErrorClass kind = ErrorClass::kMixed;
};

struct EvalReport {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  double word_accuracy = 1.0;  ///< gold words recovered exactly
  std::size_t predicted_boundaries = 0;
  std::size_t gold_boundaries = 0;
  std::size_t correct_boundaries = 0;
  std::size_t gold_words = 0;
  std::size_t matched_words = 0;
  std::vector<SegmentError> errors;

  /// Boundaries present in exactly one of the two segmentations.
  std::size_t boundary_errors() const {
    return (predicted_boundaries - correct_boundaries) +
           (gold_boundaries - correct_boundaries);
  }
};

/// Throws std::invalid_argument if the letter streams differ. An empty set
/// of predicted (gold) boundaries gives precision (recall) 1.
EvalReport compare(const Segmentation& pred, const Segmentation& gold);

/// key: value lines, followed by one block per error.
void write_report_text(std::ostream& os, const EvalReport& report,
                       const Segmentation& pred, const Segmentation& gold);
/// Machine-readable form of the same report.
void write_report_json(std::ostream& os, const EvalReport& report);

}  // namespace wordseg

#endif  // WORDSEG_EVALUATION_HPP_
