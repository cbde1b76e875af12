// experiment.hpp
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
// Learn-then-segment experiments over a corpus.
//
// A run samples `learn_words` words from the corpus into a learning-mode
// session, switches to output mode, streams the corpus once in its own
// order, flushes, and scores the result against the corpus segmentation.

#ifndef WORDSEG_EXPERIMENT_HPP_
#define WORDSEG_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wordseg/config.hpp"
#include "wordseg/evaluation.hpp"
#include "wordseg/segmenter.hpp"
#include "wordseg/streamgen.hpp"

namespace wordseg {

struct RunSpec {
  /// Threshold numerator; f_T = k / corpus letter count.
  double k = 0.76;
  std::size_t learn_words = 175000;
  std::uint32_t seed = 123456;
  /// threshold_prob is overwritten from k; everything else is used as is.
  EngineConfig engine;
};

/// engine with threshold_prob = float(k / letters). Throws
/// std::invalid_argument for k <= 0 or a corpus without letters.
EngineConfig make_config(const RunSpec& spec, const Corpus& corpus);

struct RunResult {
  std::vector<Emission> emissions;  ///< output phase only
  /// Detachment batches followed by the statistics block.
  std::string replica_text;
  Segmentation predicted;
  Segmentation gold;
  EvalReport report;
  MemoryStats stats;
  std::string window_letters;  ///< left in the window after the flush
};

/// `trace` receives one line per event; `memory_dump` the final sequence
/// memory. Either may be null.
RunResult run_experiment(const RunSpec& spec, const Corpus& corpus,
                         std::ostream* trace = nullptr,
                         std::ostream* memory_dump = nullptr);

struct SweepRow {
  double k = 0.0;
  std::size_t learn_words = 0;
  RunResult result;
};

/// One run per (k, learning words) pair, executed concurrently. Rows are
/// ordered by learning words, then k, each in the given order. An empty
/// `learn_words` means base.learn_words only.
std::vector<SweepRow> sweep(const RunSpec& base, const Corpus& corpus,
                            std::span<const double> ks,
                            std::span<const std::size_t> learn_words = {});

/// Fixed-width comparison table: k, learning words, errors, boundary
/// errors, F1, and the error spans.
void write_sweep_table(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace wordseg

#endif  // WORDSEG_EXPERIMENT_HPP_
