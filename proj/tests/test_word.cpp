#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vbraid/word.hpp"

using namespace vbraid;

TEST_CASE("parse and print") {
  BraidWord w = parse_word("s1 t2 s1'", 3);
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[0] == sigma(1, 1));
  CHECK(w.letters[1] == tau(2));
  CHECK(w.letters[2] == sigma(1, -1));
  CHECK(word_to_text(w) == "s1 t2 s1'");

  CHECK(parse_word("", 4).letters.empty());
  CHECK(word_to_text(parse_word("", 4)) == "");
  CHECK(parse_word("  s2   t1 ", 3) == parse_word("s2 t1", 3));
  // a primed tau is still just a tau
  CHECK(parse_word("t2'", 3) == parse_word("t2", 3));
}

TEST_CASE("parse errors carry a code") {
  auto code_of = [](const std::string &text, int n) {
    try {
      parse_word(text, n);
    } catch (const ParseError &e) {
      return e.code;
    }
    return ParseCode::Malformed;  // not reached on the inputs below
  };
  CHECK(code_of("x1", 3) == ParseCode::UnknownToken);
  CHECK(code_of("s", 3) == ParseCode::EmptyIndex);
  CHECK(code_of("s3", 3) == ParseCode::IndexOutOfRange);
  CHECK(code_of("s0", 3) == ParseCode::IndexOutOfRange);
  CHECK(code_of("s1''", 3) == ParseCode::Malformed);
  CHECK_THROWS_AS(parse_word("s1", 1), ParseError);
  CHECK_THROWS_AS(make_word(2, {sigma(1, 2)}), ParseError);
  CHECK_THROWS_AS(make_word(2, {sigma(2, 1)}), ParseError);
}

TEST_CASE("endpoint permutation convention") {
  // t1 t2 on three strands: 1 -> 3, 2 -> 1, 3 -> 2
  Permutation p = permutation(parse_word("t1 t2", 3));
  CHECK(p.images == std::vector<int>{3, 1, 2});
  // sigma letters move strands the same way tau letters do
  CHECK(permutation(parse_word("s1 s2", 3)) == p);
  CHECK(permutation(parse_word("s1' s2", 3)) == p);
  CHECK(permutation(parse_word("", 3)) == Permutation::identity(3));
}

TEST_CASE("permutation against direct position tracking") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = oracles::rnd_int(rng, 1, 6);
    BraidWord w = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 30));
    CHECK(permutation(w).images == oracles::final_positions(w));
  }
}

TEST_CASE("compose matches concatenation") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracles::rnd_int(rng, 2, 5);
    BraidWord w1 = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 12));
    BraidWord w2 = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 12));
    CHECK(permutation(concat(w1, w2)) ==
          compose(permutation(w2), permutation(w1)));
  }
  CHECK_THROWS_AS(concat(parse_word("s1", 2), parse_word("s1", 3)),
                  StrandCountMismatch);
}

TEST_CASE("inverse undoes a word") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracles::rnd_int(rng, 2, 5);
    BraidWord w = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 12));
    CHECK(permutation(concat(w, invert(w))).is_identity());
    CHECK(inverse(permutation(w)) == permutation(invert(w)));
    CHECK(invert(invert(w)) == w);
  }
}

TEST_CASE("word json roundtrip") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    int n = oracles::rnd_int(rng, 1, 5);
    BraidWord w = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 10));
    CHECK(word_from_json(word_to_json(w)) == w);
  }
  CHECK_THROWS_AS(word_from_json("{}"), Error);
  CHECK_THROWS_AS(word_from_json("not json"), Error);
}
