// Copyright 2026 The wordseg Authors.
// Licensed under the Apache License, Version 2.0.

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "wordseg/sequence_memory.hpp"

using namespace wordseg;

namespace {

SequenceId add_word(SequenceMemory& m, std::string_view w) {
  SequenceId id = kNoSequence;
  for (char c : w) id = m.next_sequence(id, c);
  return id;
}

}  // namespace

TEST_CASE("roots are preassigned a..z with ids 1..26") {
  SequenceMemory m;
  CHECK(m.stats().alloc_count == 26);
  for (char c = 'a'; c <= 'z'; ++c) {
    const SequenceId id = m.next_sequence(kNoSequence, c);
    CHECK(id == static_cast<SequenceId>(c - 'a' + 1));
    CHECK(m[id].length == 1);
    CHECK(m[id].is_root());
    CHECK(m[id].create_count == 0);
  }
  CHECK(m.next_sequence(kNoSequence, 'a') == 1);
}

TEST_CASE("hash_index hand-evaluated fold") {
  SequenceMemory m;
  const SequenceRecord& e = m[SequenceMemory::root_id('e')];
  REQUIRE(e.id == 5);
  // Bytes 'r'=114, 'e'=101, length 1, id low 5, id high 0:
  // 114 -> 1925 -> 30801 -> 492821 -> 7885136; 7885136 % 12577 = 11934.
  CHECK(hash_index(e, 'r') == 11934u);
  CHECK(hash_index(e, 'r') == hash_index(e, 'r'));
}

TEST_CASE("hash_index uses only the low 16 bits of the id") {
  SequenceRecord a;
  a.id = 5;
  a.event = 'e';
  a.length = 1;
  SequenceRecord b = a;
  b.id = 5 + 65536;
  CHECK(hash_index(a, 'q') == hash_index(b, 'q'));
  b.id = 5 + 256;
  CHECK(hash_index(a, 'q') != hash_index(b, 'q'));
}

TEST_CASE("hash_index stays below the bucket count") {
  SequenceRecord r;
  for (std::uint32_t id = 1; id < 70000; id += 97) {
    r.id = id;
    r.event = static_cast<char>('a' + id % 26);
    r.length = 1 + id % 31;
    for (char c = 'a'; c <= 'z'; ++c) CHECK(hash_index(r, c) < kHashBuckets);
  }
}

TEST_CASE("next_sequence appends one letter") {
  SequenceMemory m;
  const SequenceId the = add_word(m, "the");
  const SequenceId them = m.next_sequence(the, 'm');
  CHECK(m.letters(them) == "them");
  CHECK(m[them].length == 4);
  CHECK(m[them].prev == the);
  CHECK(m.stats().alloc_count == 26 + 3);

  SUBCASE("lookup is idempotent and touches no counters") {
    const SequenceRecord before = m[them];
    CHECK(m.next_sequence(the, 'm') == them);
    CHECK(m.stats().alloc_count == 26 + 3);
    const SequenceRecord& after = m[them];
    CHECK(after.in_count == before.in_count);
    CHECK(after.out_count == before.out_count);
    CHECK(after.succ_count == before.succ_count);
    CHECK(m.find(the, 'm') == them);
    CHECK(m.find(the, 'y') == kNoSequence);
  }
}

TEST_CASE("new records record the event counter at creation") {
  SequenceMemory m;
  for (int i = 0; i < 7; ++i) m.count_event();
  const SequenceId ab = add_word(m, "ab");
  CHECK(m[ab].create_count == 7);
  CHECK(m[ab].in_count == 0);
  CHECK(m[ab].accum_scores == 0.0f);
}

TEST_CASE("next_sequence rejects bad input") {
  SequenceMemory m;
  CHECK_THROWS_AS(m.next_sequence(kNoSequence, 'A'), std::invalid_argument);
  CHECK_THROWS_AS(m.next_sequence(1, '-'), std::invalid_argument);
  CHECK_THROWS_AS(m.next_sequence(999, 'a'), std::invalid_argument);
}

TEST_CASE("many records survive storage growth with distinct chains") {
  SequenceMemory m;
  std::vector<SequenceId> ids;
  for (char a = 'a'; a <= 'z'; ++a)
    for (char b = 'a'; b <= 'z'; ++b)
      for (char c = 'a'; c <= 'e'; ++c)
        ids.push_back(add_word(m, std::string{a, b, c}));
  CHECK(m.stats().alloc_count == 26 + 26 * 26 + 26 * 26 * 5);
  for (SequenceId id : ids) {
    // Trie well-formedness: length - 1 steps reach a root.
    SequenceId p = id;
    for (std::uint32_t i = 1; i < m[id].length; ++i) p = m[p].prev;
    CHECK(m[p].is_root());
  }
  CHECK(m.letters(ids[27]) == "afc");
}

TEST_CASE("passes_threshold") {
  EngineConfig cfg;
  cfg.threshold_prob = static_cast<float>(0.4 / 44.0);
  SequenceRecord r;
  r.id = 100;

  SUBCASE("frequency above threshold") {
    // (10 - 4.567) / 500 = 0.010866 >= 0.0090909
    r.in_count = 10;
    r.create_count = 0;
    CHECK(passes_threshold(r, 500, cfg));
  }
  SUBCASE("frequency below threshold") {
    // (10 - 4.567) / 600 = 0.009055 < 0.0090909
    r.in_count = 10;
    CHECK_FALSE(passes_threshold(r, 600, cfg));
  }
  SUBCASE("created at this event") {
    r.in_count = 1;
    r.create_count = 42;
    CHECK_FALSE(passes_threshold(r, 42, cfg));
  }
  SUBCASE("fewer observations than the bias") {
    r.in_count = 4;
    CHECK_FALSE(passes_threshold(r, 5, cfg));
    r.in_count = 5;
    CHECK(passes_threshold(r, 5, cfg));
  }
}

TEST_CASE("average_word_score") {
  SequenceRecord r;
  r.in_count = 8;
  r.accum_scores = 0.0f;
  CHECK(average_word_score(r) == 0.0f);
  r.accum_scores = 8.0f;
  CHECK(average_word_score(r) == 1.0f);
  r.accum_scores = 4.0f;
  CHECK(average_word_score(r) == 0.5f);
}

TEST_CASE("dump writes one tab-separated line per record") {
  SequenceMemory m;
  const SequenceId ox = add_word(m, "ox");
  m[ox].in_count = 3;
  m[ox].out_count = 2;
  std::ostringstream os;
  m.dump(os);
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 27);
  CHECK(text.find("27\tox\t0\t3\t2\t0\t0\n") != std::string::npos);
  CHECK(text.rfind("1\ta\t0\t0\t0\t0\t0\n", 0) == 0);
}
