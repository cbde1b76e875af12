// Copyright 2026 The wordseg Authors.
// Licensed under the Apache License, Version 2.0.

#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wordseg/evaluation.hpp"

using namespace wordseg;

TEST_CASE("identical segmentations score perfectly") {
  const Segmentation s = Segmentation::from_words({"the", "quick", "fox"});
  const EvalReport r = compare(s, s);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.f1 == 1.0);
  CHECK(r.word_accuracy == 1.0);
  CHECK(r.errors.empty());
  CHECK(r.boundary_errors() == 0);
}

TEST_CASE("a merged pair: nothing predicted, one gold boundary") {
  const Segmentation pred("thequick", {});
  const Segmentation gold("thequick", {3});
  const EvalReport r = compare(pred, gold);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);
  CHECK(r.word_accuracy == 0.0);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].kind == ErrorClass::kMerge);
  CHECK(r.errors[0].begin == 0);
  CHECK(r.errors[0].end == 8);
  CHECK(r.errors[0].predicted == std::vector<std::string>{"thequick"});
  CHECK(r.errors[0].gold == std::vector<std::string>{"the", "quick"});
}

TEST_CASE("hand-counted precision and recall") {
  // gold: in|a|world|of|high|ly   pred: ina|world|of|high|ly|  (extra split)
  const std::string letters = "inaworldofhighly";
  const Segmentation gold(letters, {2, 3, 8, 10});
  const Segmentation pred(letters, {3, 8, 10, 14});
  const EvalReport r = compare(pred, gold);
  CHECK(r.correct_boundaries == 3);
  CHECK(r.precision == doctest::Approx(0.75));
  CHECK(r.recall == doctest::Approx(0.75));
  CHECK(r.f1 == doctest::Approx(0.75));
  CHECK(r.boundary_errors() == 2);
  CHECK(r.gold_words == 5);
  CHECK(r.matched_words == 2);  // world, of
  REQUIRE(r.errors.size() == 2);
  CHECK(r.errors[0].kind == ErrorClass::kMerge);
  CHECK(r.errors[0].predicted == std::vector<std::string>{"ina"});
  CHECK(r.errors[1].kind == ErrorClass::kSplit);
  CHECK(r.errors[1].predicted == std::vector<std::string>{"high", "ly"});
  CHECK(r.errors[1].gold == std::vector<std::string>{"highly"});
}

TEST_CASE("mixed error span") {
  const Segmentation gold("abcd", {1});
  const Segmentation pred("abcd", {2});
  const EvalReport r = compare(pred, gold);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].kind == ErrorClass::kMixed);
  CHECK(std::string(to_string(r.errors[0].kind)) == "mixed");
}

TEST_CASE("F1 is symmetric and equals 1 exactly when boundary sets agree") {
  std::mt19937 rng(11);
  const std::string letters(30, 'a');
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::size_t> a, b;
    for (std::size_t i = 1; i < letters.size(); ++i) {
      if (rng() % 4 == 0) a.push_back(i);
      if (rng() % 4 == 0) b.push_back(i);
    }
    if (trial % 5 == 0) b = a;
    const Segmentation sa(letters, a), sb(letters, b);
    const EvalReport ab = compare(sa, sb), ba = compare(sb, sa);
    CHECK(ab.f1 == doctest::Approx(ba.f1));
    CHECK(ab.precision == doctest::Approx(ba.recall));
    CHECK((ab.f1 == 1.0) == (a == b));
    CHECK(ab.errors.empty() == (a == b));
  }
}

TEST_CASE("Segmentation validation") {
  CHECK_THROWS_AS(Segmentation("abc", {0}), std::invalid_argument);
  CHECK_THROWS_AS(Segmentation("abc", {3}), std::invalid_argument);
  const Segmentation s("abc", {2, 1, 2});
  CHECK(s.boundaries() == std::vector<std::size_t>{1, 2});
  CHECK(s.words() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(compare(Segmentation("abc", {}), Segmentation("abd", {})),
                  std::invalid_argument);
}

TEST_CASE("reports") {
  const Segmentation gold = Segmentation::from_words({"in", "a", "world"});
  const Segmentation pred = Segmentation::from_words({"ina", "world"});
  const EvalReport r = compare(pred, gold);

  std::ostringstream text;
  write_report_text(text, r, pred, gold);
  CHECK(text.str().find("errors: 1\n") != std::string::npos);
  CHECK(text.str().find("  gold: in a world\n        ^^^^\n") !=
        std::string::npos);
  CHECK(text.str().find("  pred: ina world\n        ^^^\n") !=
        std::string::npos);

  std::ostringstream js;
  write_report_json(js, r);
  const nlohmann::json j = nlohmann::json::parse(js.str());
  CHECK(j["boundary_errors"] == 1);
  CHECK(j["errors"][0]["class"] == "merge");
  CHECK(j["errors"][0]["gold"] == nlohmann::json({"in", "a"}));
}
