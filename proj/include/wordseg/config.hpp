// config.hpp
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

#ifndef WORDSEG_CONFIG_HPP_
#define WORDSEG_CONFIG_HPP_

#include <stdexcept>
#include <string>

namespace wordseg {

/// Maximum number of columns (and cells per column) any window may hold.
inline constexpr int kMaxWindowCapacity = 255;

/// Tuned parameters of a segmentation session.
///
/// All score arithmetic is 32-bit `float`; the defaults reproduce the
/// reference engine bit for bit.
struct EngineConfig {
  /// Threshold frequency f_T. A stored sequence becomes valid once its
  /// biased observation frequency reaches this value. Usually K / N with N
  /// the letter count of the hidden dictionary.
  float threshold_prob = 0.4f / 44.0f;
  /// Subtracted from in_count before the frequency test; a sequence needs
  /// at least five observations before it can fire.
  float bias = 4.567f;
  /// Ring size of the event window. Also bounds the cells per column.
  int window_capacity = 32;
  /// Output-mode width below which nothing is detached. Words ending within
  /// the newest min_columns / 2 columns are kept back for context.
  int min_columns = 16;
  /// Minimum average word score of the survivor predecessor that opens the
  /// detachment gate.
  float gate_score = 0.50f;
  /// Letter injected by flush() to push out the last words.
  char flush_sentinel = 'x';
  /// When false, detachment uses first-level survivor lengths only.
  bool second_level = true;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const {
    if (!(threshold_prob > 0.0f && threshold_prob < 1.0f))
      throw std::invalid_argument("threshold_prob must lie in (0, 1)");
    if (window_capacity < 2 || window_capacity > kMaxWindowCapacity)
      throw std::invalid_argument("window_capacity must lie in [2, " +
                                  std::to_string(kMaxWindowCapacity) + "]");
    if (min_columns < 0 || min_columns > window_capacity / 2)
      throw std::invalid_argument(
          "min_columns must lie in [0, window_capacity / 2]");
    if (!(gate_score > 0.0f && gate_score < 1.0f))
      throw std::invalid_argument("gate_score must lie in (0, 1)");
    if (flush_sentinel < 'a' || flush_sentinel > 'z')
      throw std::invalid_argument("flush_sentinel must be a letter a-z");
  }
};

}  // namespace wordseg

#endif  // WORDSEG_CONFIG_HPP_
