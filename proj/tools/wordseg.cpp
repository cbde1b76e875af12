// wordseg.cpp
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
// Command-line front end.
//
//   wordseg generate --corpus F --n N --seed S --stream OUT --gold OUT
//   wordseg run      --corpus F --k K --learn-words N [engine flags]
//   wordseg sweep    --corpus F --k K1 --k K2 ... [engine flags]
//
// Exit codes: 0 ok, 1 usage or input error, 2 golden mismatch.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordseg/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGoldenMismatch = 2;

struct EngineFlags {
  std::string corpus;
  std::uint32_t seed = 123456;
  float bias = 4.567f;
  int window = 32;
  int min_columns = 16;
  float gate = 0.50f;
  bool no_second_level = false;

  void add_to(CLI::App& app) {
    app.add_option("--corpus", corpus, "Whitespace-separated word list")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "LCG seed")->capture_default_str();
    app.add_option("--bias", bias, "Observation bias in the frequency test")
        ->capture_default_str();
    app.add_option("--window", window, "Event window capacity")
        ->capture_default_str();
    app.add_option("--min-columns", min_columns,
                   "Minimum window width before detachment")
        ->capture_default_str();
    app.add_option("--gate", gate, "Average word score that opens the gate")
        ->capture_default_str();
    app.add_flag("--no-second-level", no_second_level,
                 "Select boundaries from first-level scores only");
  }

  wordseg::RunSpec spec(double k, std::size_t learn_words) const {
    wordseg::RunSpec s;
    s.k = k;
    s.learn_words = learn_words;
    s.seed = seed;
    s.engine.bias = bias;
    s.engine.window_capacity = window;
    s.engine.min_columns = min_columns;
    s.engine.gate_score = gate;
    s.engine.second_level = !no_second_level;
    return s;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// First differing line, for the golden-mismatch diagnostic.
void report_mismatch(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected), a(actual);
  std::string le, la;
  for (int line = 1;; ++line) {
    const bool more_e = static_cast<bool>(std::getline(e, le));
    const bool more_a = static_cast<bool>(std::getline(a, la));
    if (!more_e && !more_a) break;
    if (le != la || more_e != more_a) {
      std::cerr << "golden mismatch at line " << line << "\n  expected: "
                << (more_e ? le : "<eof>") << "\n  actual:   "
                << (more_a ? la : "<eof>") << '\n';
      return;
    }
  }
}

int cmd_generate(const std::string& corpus_path, std::size_t n,
                 std::uint32_t seed, const std::string& stream_path,
                 const std::string& gold_path) {
  const wordseg::Corpus corpus = wordseg::Corpus::load(corpus_path);
  const wordseg::GeneratedStream g = wordseg::generate(corpus, n, seed);
  std::ofstream stream = open_out(stream_path);
  if (!g.letters.empty()) stream << g.letters << '\n';
  std::ofstream gold = open_out(gold_path);
  for (std::size_t b : g.boundaries) gold << b << '\n';
  return kExitOk;
}

int cmd_run(const EngineFlags& flags, double k, std::size_t learn_words,
            const std::string& emit,
            const std::string& trace_path, const std::string& golden_path,
            const std::string& report_json, const std::string& dump_path) {
  const wordseg::Corpus corpus = wordseg::Corpus::load(flags.corpus);

  std::unique_ptr<std::ofstream> trace, dump;
  if (!trace_path.empty())
    trace = std::make_unique<std::ofstream>(open_out(trace_path));
  if (!dump_path.empty())
    dump = std::make_unique<std::ofstream>(open_out(dump_path));

  const wordseg::RunResult r = wordseg::run_experiment(
      flags.spec(k, learn_words), corpus, trace.get(), dump.get());

  if (emit == "replica") {
    std::cout << r.replica_text;
  } else if (emit == "clean") {
    std::cout << wordseg::render_clean(r.emissions) << '\n';
  } else {
    wordseg::write_report_text(std::cout, r.report, r.predicted, r.gold);
    std::cout << "sequences_stored: " << r.stats.alloc_count << '\n'
              << "sequences_firing: " << r.stats.fire_count << '\n'
              << "total_event_count: " << r.stats.event_count << '\n';
  }

  if (!report_json.empty()) {
    std::ofstream out = open_out(report_json);
    wordseg::write_report_json(out, r.report);
  }

  if (!golden_path.empty()) {
    const std::string expected = read_file(golden_path);
    if (expected != r.replica_text) {
      report_mismatch(expected, r.replica_text);
      return kExitGoldenMismatch;
    }
  }
  return kExitOk;
}

int cmd_sweep(const EngineFlags& flags, const std::vector<double>& ks,
              const std::vector<std::size_t>& learn_words) {
  const wordseg::Corpus corpus = wordseg::Corpus::load(flags.corpus);
  const std::vector<wordseg::SweepRow> rows = wordseg::sweep(
      flags.spec(ks.front(), learn_words.front()), corpus, ks, learn_words);
  wordseg::write_sweep_table(std::cout, rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line unsupervised word segmentation"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a sampled letter stream");
  std::string gen_corpus, stream_path, gold_path;
  std::size_t gen_n = 500;
  std::uint32_t gen_seed = 123456;
  gen->add_option("--corpus", gen_corpus)->required()->check(
      CLI::ExistingFile);
  gen->add_option("--n", gen_n, "Words to sample")->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--stream", stream_path, "Letter stream output")
      ->required();
  gen->add_option("--gold", gold_path, "Boundary positions output")
      ->required();

  // run
  auto* run = app.add_subcommand("run", "Learn, segment the corpus, report");
  EngineFlags run_flags;
  run_flags.add_to(*run);
  double run_k = 0.76;
  std::size_t run_learn = 175000;
  run->add_option("--learn-words", run_learn,
                  "Number of words sampled for the learning phase")
      ->capture_default_str();
  std::string emit = "replica", trace_path, golden_path, report_json,
              dump_path;
  run->add_option("--k", run_k, "Threshold numerator")->capture_default_str();
  run->add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"replica", "clean", "report"}))
      ->capture_default_str();
  run->add_option("--trace", trace_path, "Per-event column trace file");
  run->add_option("--golden", golden_path,
                  "Expected replica output; exit 2 on any difference")
      ->check(CLI::ExistingFile);
  run->add_option("--report-json", report_json, "Evaluation report (JSON)");
  run->add_option("--dump-memory", dump_path, "Sequence memory dump (TSV)");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Compare runs over several k");
  EngineFlags sweep_flags;
  sweep_flags.add_to(*sw);
  std::vector<double> ks;
  std::vector<std::size_t> sweep_learn{175000};
  sw->add_option("--k", ks, "Threshold numerators")->required();
  sw->add_option("--learn-words", sweep_learn,
                 "Learning lengths; every k runs at every length")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen)
      return cmd_generate(gen_corpus, gen_n, gen_seed, stream_path, gold_path);
    if (*run)
      return cmd_run(run_flags, run_k, run_learn, emit, trace_path, golden_path,
                     report_json, dump_path);
    if (*sw) return cmd_sweep(sweep_flags, ks, sweep_learn);
  } catch (const std::exception& e) {
    std::cerr << "wordseg: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
