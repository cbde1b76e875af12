// experiment.cpp
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

#include "wordseg/experiment.hpp"

#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wordseg {

EngineConfig make_config(const RunSpec& spec, const Corpus& corpus) {
  if (!(spec.k > 0.0)) throw std::invalid_argument("k must be positive");
  if (corpus.letter_count() == 0)
    throw std::invalid_argument("corpus has no letters");
  EngineConfig cfg = spec.engine;
  cfg.threshold_prob = static_cast<float>(
      spec.k / static_cast<double>(corpus.letter_count()));
  cfg.validate();
  return cfg;
}

RunResult run_experiment(const RunSpec& spec, const Corpus& corpus,
                         std::ostream* trace, std::ostream* memory_dump) {
  Session session(make_config(spec, corpus));
  session.set_trace(trace);

  const GeneratedStream learning =
      generate(corpus, spec.learn_words, spec.seed);
  session.process(learning.letters);

  session.set_mode(Mode::kOutput);
  RunResult r;
  for (const std::string& w : corpus.words()) {
    std::vector<Emission> e = session.process(w);
    r.emissions.insert(r.emissions.end(), e.begin(), e.end());
  }
  std::vector<Emission> tail = session.flush();
  r.emissions.insert(r.emissions.end(), tail.begin(), tail.end());

  if (memory_dump != nullptr) session.memory().dump(*memory_dump);
  r.stats = session.stats();
  r.window_letters = session.window().letters();
  r.replica_text = render_replica(r.emissions) +
                   render_stats(r.stats, corpus.word_count(),
                                corpus.letter_count());
  r.gold = Segmentation::from_words(corpus.words());
  r.predicted = Segmentation::from_words(emitted_words(r.emissions));
  r.report = compare(r.predicted, r.gold);
  return r;
}

std::vector<SweepRow> sweep(const RunSpec& base, const Corpus& corpus,
                            std::span<const double> ks,
                            std::span<const std::size_t> learn_words) {
  std::vector<std::size_t> lengths(learn_words.begin(), learn_words.end());
  if (lengths.empty()) lengths.push_back(base.learn_words);

  std::vector<SweepRow> rows;
  std::vector<std::future<RunResult>> jobs;
  for (std::size_t n : lengths) {
    for (double k : ks) {
      RunSpec spec = base;
      spec.k = k;
      spec.learn_words = n;
      rows.push_back({k, n, {}});
      jobs.push_back(std::async(std::launch::async, [spec, &corpus] {
        return run_experiment(spec, corpus);
      }));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].result = jobs[i].get();
  return rows;
}

void write_sweep_table(std::ostream& os, std::span<const SweepRow> rows) {
  os << std::left << std::setw(10) << "k" << std::setw(12) << "learn"
     << std::setw(8) << "errors" << std::setw(11) << "b_errors"
     << std::setw(10) << "f1"
     << "spans\n";
  for (const SweepRow& row : rows) {
    const EvalReport& rep = row.result.report;
    std::ostringstream spans;
    for (const SegmentError& e : rep.errors) {
      if (spans.tellp() > 0) spans << ", ";
      for (std::size_t i = 0; i < e.predicted.size(); ++i)
        spans << (i ? " " : "") << e.predicted[i];
      spans << " (" << to_string(e.kind) << ")";
    }
    std::ostringstream kstr;
    kstr << row.k;
    std::ostringstream f1;
    f1 << std::fixed << std::setprecision(4) << rep.f1;
    os << std::left << std::setw(10) << kstr.str() << std::setw(12)
       << row.learn_words << std::setw(8) << rep.errors.size()
       << std::setw(11) << rep.boundary_errors() << std::setw(10) << f1.str()
       << spans.str() << '\n';
  }
}

}  // namespace wordseg
