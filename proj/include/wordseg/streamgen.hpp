// streamgen.hpp
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
// Stochastic stream generator: words drawn uniformly from a corpus and
// concatenated without separators.

#ifndef WORDSEG_STREAMGEN_HPP_
#define WORDSEG_STREAMGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wordseg {

/// 32-bit linear congruential generator with 15-bit output
/// (multiplier 214013, increment 2531011, bits 30..16 of the new state).
class Lcg {
 public:
  explicit Lcg(std::uint32_t seed = 1) : state_(seed) {}

  int next() {
    state_ = state_ * 214013u + 2531011u;
    return static_cast<int>((state_ >> 16) & 0x7FFFu);
  }

  std::uint32_t state() const { return state_; }

  static constexpr int kMax = 0x7FFF;

 private:
  std::uint32_t state_;
};

/// Ordered word list. Duplicates are kept; order matters for output runs.
class Corpus {
 public:
  Corpus() = default;
  /// Words must be non-empty and all letters a..z; throws otherwise.
  explicit Corpus(std::vector<std::string> words);

  /// Whitespace-separated tokens; lowercases and drops anything outside
  /// a..z. Tokens that end up empty are discarded.
  static Corpus parse(std::string_view text);
  /// Throws std::runtime_error if the file cannot be read.
  static Corpus load(const std::filesystem::path& path);

  const std::vector<std::string>& words() const { return words_; }
  std::size_t word_count() const { return words_.size(); }
  std::size_t letter_count() const { return letter_count_; }
  bool empty() const { return words_.empty(); }

  /// All words concatenated in order.
  std::string letters() const;

 private:
  std::vector<std::string> words_;
  std::size_t letter_count_ = 0;
};

/// Uniform draw: LCG value modulo word count. Throws on an empty corpus.
const std::string& next_word(const Corpus& corpus, Lcg& rng);

struct GeneratedStream {
  std::string letters;
  /// Internal word boundaries (0 < b < letters.size()), ascending.
  std::vector<std::size_t> boundaries;
  std::vector<std::size_t> word_indices;
};

GeneratedStream generate(const Corpus& corpus, std::size_t n_words,
                         std::uint32_t seed);

}  // namespace wordseg

#endif  // WORDSEG_STREAMGEN_HPP_
