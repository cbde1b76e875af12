// acceptance.cpp
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
// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.
//
//   acceptance [DATA_DIR]

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/properties.hpp"
#include "wordseg/experiment.hpp"

namespace {

using wordseg::ErrorClass;
using wordseg::RunResult;
using wordseg::RunSpec;
using wordseg::SegmentError;

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  if (!ok) ++failures;
}

struct Timed {
  RunResult result;
  double seconds = 0.0;
};

Timed timed_run(const RunSpec& spec, const wordseg::Corpus& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{wordseg::run_experiment(spec, corpus), 0.0};
  t.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return t;
}

std::string describe(const RunResult& r) {
  std::ostringstream os;
  os << r.report.errors.size() << " error spans, "
     << r.report.boundary_errors() << " boundary errors";
  for (const SegmentError& e : r.report.errors) {
    os << " [";
    for (std::size_t i = 0; i < e.predicted.size(); ++i)
      os << (i ? " " : "") << e.predicted[i];
    os << "@" << e.begin << " " << to_string(e.kind) << "]";
  }
  return os.str();
}

bool has_split(const RunResult& r, const std::vector<std::string>& pred) {
  for (const SegmentError& e : r.report.errors)
    if (e.kind == ErrorClass::kSplit && e.predicted == pred) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : WORDSEG_DATA_DIR;
  const wordseg::Corpus fox = wordseg::Corpus::load(dir / "fox.txt");
  const wordseg::Corpus gettysburg =
      wordseg::Corpus::load(dir / "gettysburg.txt");

  // Small sentence, exact recovery.
  {
    RunSpec spec;
    spec.k = 0.4;
    spec.learn_words = 500;
    const Timed t = timed_run(spec, fox);
    std::ostringstream d;
    d << describe(t.result) << ", " << t.seconds << " s";
    report("fox_exact", t.result.report.errors.empty() &&
                            t.result.predicted.words() == fox.words() &&
                            t.seconds < 1.0,
           d.str());
  }

  // Reference run: three merge errors, memory size, runtime.
  {
    const Timed t = timed_run(RunSpec{}, gettysburg);
    const RunResult& r = t.result;
    int ina = 0, ona = 0;
    bool all_merges = r.report.errors.size() == 3;
    for (const SegmentError& e : r.report.errors) {
      all_merges = all_merges && e.kind == ErrorClass::kMerge;
      if (e.predicted == std::vector<std::string>{"ina"}) ++ina;
      if (e.predicted == std::vector<std::string>{"ona"}) ++ona;
    }
    std::ostringstream d;
    d << describe(r) << "; stored " << r.stats.alloc_count << ", firing "
      << r.stats.fire_count << ", " << t.seconds << " s";
    report("gettysburg_reference",
           all_merges && ina == 2 && ona == 1 &&
               r.stats.alloc_count == 14543 && r.stats.fire_count == 1532 &&
               t.seconds < 60.0,
           d.str());
  }

  // Threshold sensitivity and learning length.
  {
    RunSpec a;
    a.k = 0.765;
    RunSpec b = a;
    b.learn_words = 250000;
    const RunResult ra = wordseg::run_experiment(a, gettysburg);
    const RunResult rb = wordseg::run_experiment(b, gettysburg);
    const std::vector<std::string> split{"high", "ly"};
    report("threshold_split_appears", has_split(ra, split),
           "k=0.765, 175000 words: " + describe(ra));
    report("longer_learning_removes_split", !has_split(rb, split),
           "k=0.765, 250000 words: " + describe(rb));
  }

  // Second level ablation.
  {
    RunSpec off;
    off.engine.second_level = false;
    const RunResult with = wordseg::run_experiment(RunSpec{}, gettysburg);
    const RunResult without = wordseg::run_experiment(off, gettysburg);
    std::ostringstream d;
    d << "with " << with.report.boundary_errors() << ", without "
      << without.report.boundary_errors() << " boundary errors";
    report("second_level_ablation",
           without.report.boundary_errors() > with.report.boundary_errors(),
           d.str());
  }

  // Invariants.
  namespace t = wordseg::testing;
  const auto prop = [](const char* name, const t::PropertyResult& p) {
    report(name, p.ok, p.detail);
  };
  prop("counter_identity", t::counter_identity(101, 10000));
  prop("score_normalization", t::normalization(102, 10000));
  prop("letter_conservation", t::conservation(103, 10000));
  prop("second_level_vs_exhaustive", t::second_level_optimal(104, 1000));
  prop("determinism", t::determinism(105, 10000));

  if (failures == 0)
    std::cout << "ALL PASS\n";
  else
    std::cout << "FAILURES: " << failures << '\n';
  return failures == 0 ? 0 : 1;
}
