// streamgen.cpp
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

#include "wordseg/streamgen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wordseg {

Corpus::Corpus(std::vector<std::string> words) : words_(std::move(words)) {
  for (const std::string& w : words_) {
    if (w.empty()) throw std::invalid_argument("corpus word is empty");
    if (!std::all_of(w.begin(), w.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; }))
      throw std::invalid_argument("corpus word '" + w +
                                  "' has letters outside a-z");
    letter_count_ += w.size();
  }
}

Corpus Corpus::parse(std::string_view text) {
  std::vector<std::string> words;
  std::string token;
  auto finish = [&] {
    if (!token.empty()) words.push_back(std::move(token));
    token.clear();
  };
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      finish();
      continue;
    }
    const char lower = static_cast<char>(std::tolower(c));
    if (lower >= 'a' && lower <= 'z') token.push_back(lower);
  }
  finish();
  return Corpus(std::move(words));
}

Corpus Corpus::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read corpus " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Corpus::letters() const {
  std::string out;
  out.reserve(letter_count_);
  for (const std::string& w : words_) out += w;
  return out;
}

const std::string& next_word(const Corpus& corpus, Lcg& rng) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  const auto index =
      static_cast<std::size_t>(rng.next()) % corpus.word_count();
  return corpus.words()[index];
}

GeneratedStream generate(const Corpus& corpus, std::size_t n_words,
                         std::uint32_t seed) {
  GeneratedStream out;
  if (n_words == 0) return out;
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  Lcg rng(seed);
  for (std::size_t i = 0; i < n_words; ++i) {
    const auto index =
        static_cast<std::size_t>(rng.next()) % corpus.word_count();
    if (i > 0) out.boundaries.push_back(out.letters.size());
    out.letters += corpus.words()[index];
    out.word_indices.push_back(index);
  }
  return out;
}

}  // namespace wordseg
