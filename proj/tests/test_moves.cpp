#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vbraid/moves.hpp"

using namespace vbraid;

namespace {

BraidWord W(const std::string &text, int n) { return parse_word(text, n); }

}  // namespace

TEST_CASE("word rewriting, one golden per rule") {
  WordMove m;

  m.kind = WordRuleKind::BraidTau;
  m.pos = 0;
  CHECK(rewrite_word(W("t1 t2 t1", 3), m) == W("t2 t1 t2", 3));

  m.kind = WordRuleKind::BraidSigma;
  CHECK(rewrite_word(W("s1' s2' s1'", 3), m) == W("s2' s1' s2'", 3));
  CHECK_THROWS_AS(rewrite_word(W("s1 s2 s1'", 3), m), PatternMismatch);

  m.kind = WordRuleKind::MixedBraid;
  CHECK(rewrite_word(W("s1 t2 t1", 3), m) == W("t2 t1 s2", 3));
  CHECK(rewrite_word(W("t2 t1 s2", 3), m) == W("s1 t2 t1", 3));
  CHECK(rewrite_word(W("s1' t2 t1", 3), m) == W("t2 t1 s2'", 3));
  CHECK(rewrite_word(W("t1 t2 s1", 3), m) == W("s2 t1 t2", 3));

  m.kind = WordRuleKind::DistantSwap;
  CHECK(rewrite_word(W("s1 t3", 4), m) == W("t3 s1", 4));
  CHECK_THROWS_AS(rewrite_word(W("s1 t2", 4), m), PatternMismatch);

  m.kind = WordRuleKind::TauSquare;
  CHECK(rewrite_word(W("t2 t2", 3), m) == W("", 3));
  m.insert = true;
  m.index = 1;
  CHECK(rewrite_word(W("", 3), m) == W("t1 t1", 3));

  m = WordMove{};
  m.kind = WordRuleKind::SigmaCancel;
  CHECK(rewrite_word(W("s1 s1'", 2), m) == W("", 2));
  m.insert = true;
  m.index = 1;
  m.exponent = -1;
  CHECK(rewrite_word(W("", 2), m) == W("s1' s1", 2));
}

TEST_CASE("virtual move enumeration stays virtual") {
  // no site may use the braid relation on sigmas or cancel a sigma pair
  for (const char *text : {"s1 s2 s1", "s1 s1'", "s1 t2 t1 s2 s2'"}) {
    for (const auto &m : enumerate_vm_moves(W(text, 3))) {
      CHECK(m.kind != WordRuleKind::BraidSigma);
      CHECK(m.kind != WordRuleKind::SigmaCancel);
    }
  }
  CHECK(enumerate_r3_moves(W("s1 s2 s1", 3)).size() == 1);
  CHECK(enumerate_r3_moves(W("s1 s2' s1", 3)).empty());
  CHECK(enumerate_r2_deletions(W("s1 s1'", 2)).size() == 1);
  CHECK(enumerate_r2_deletions(W("s1 s1", 2)).empty());
}

TEST_CASE("dependence closure") {
  BraidGaussDiagram g = word_to_gauss(W("s1 s2 s1'", 3));
  auto reach = dependence_closure(g);
  CHECK(reach[0][1]);
  CHECK(reach[0][2]);
  CHECK(reach[1][2]);

  // distant arrows stay unordered
  BraidGaussDiagram h = word_to_gauss(W("s1 s3", 4));
  auto reach2 = dependence_closure(h);
  CHECK_FALSE(reach2[0][1]);
}

TEST_CASE("pair deletion sites") {
  CHECK(enumerate_omega2_deletions(word_to_gauss(W("s1 s2 s1'", 3))).empty());

  auto sites = enumerate_omega2_deletions(word_to_gauss(W("s1 s1'", 2)));
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].arrows == std::vector<int>{0, 1});
  BraidGaussDiagram after = apply_omega(word_to_gauss(W("s1 s1'", 2)), sites[0]);
  CHECK(after.arrows.empty());
  CHECK(after.perm.is_identity());

  // an arrow wedged between the pair blocks the deletion
  CHECK(enumerate_omega2_deletions(word_to_gauss(W("s1 s2 s1'", 3))).empty());
  // ...but an independent arrow between them does not
  auto ok = enumerate_omega2_deletions(word_to_gauss(W("s1 s3 s1'", 4)));
  REQUIRE(ok.size() == 1);
  CHECK(ok[0].arrows == std::vector<int>{0, 2});
}

TEST_CASE("insert then delete is the identity") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    BraidGaussDiagram g = oracles::random_diagram(rng, 4, 6, true);
    if (g.n < 2) continue;
    CanonicalGauss c = canonical_form(g);
    auto ins = enumerate_omega2_insertions(g);
    REQUIRE(!ins.empty());
    const auto &site = ins[static_cast<size_t>(oracles::rnd_int(
        rng, 0, static_cast<int>(ins.size()) - 1))];
    BraidGaussDiagram bigger = apply_omega(g, site);
    CHECK(bigger.arrows.size() == g.arrows.size() + 2);
    bool recovered = false;
    for (const auto &del : enumerate_omega2_deletions(bigger)) {
      if (canonical_form(apply_omega(bigger, del)) == c) {
        recovered = true;
        break;
      }
    }
    CHECK(recovered);
  }
}

TEST_CASE("braid block move") {
  BraidGaussDiagram lhs = word_to_gauss(W("s1 s2 s1", 3));
  BraidGaussDiagram rhs = word_to_gauss(W("s2 s1 s2", 3));
  CHECK_FALSE(canonical_form(lhs) == canonical_form(rhs));

  auto sites = enumerate_omega3(lhs);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].forward);
  CHECK(canonical_form(apply_omega(lhs, sites[0])) == canonical_form(rhs));

  auto back = enumerate_omega3(rhs);
  REQUIRE(back.size() == 1);
  CHECK_FALSE(back[0].forward);
  CHECK(canonical_form(apply_omega(rhs, back[0])) == canonical_form(lhs));

  // mixed signs admit no block move
  CHECK(enumerate_omega3(word_to_gauss(W("s1 s2 s1'", 3))).empty());
}

TEST_CASE("block moves preserve the arrow multiset and permutation") {
  std::mt19937 rng(42);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 60; ++trial) {
    // random soup almost never contains a block pattern, so plant one
    BraidGaussDiagram g = oracles::random_diagram(rng, 5, 5, true);
    if (g.n < 3) continue;
    int i = oracles::rnd_int(rng, 1, g.n);
    int j = oracles::rnd_int(rng, 1, g.n);
    while (j == i) j = oracles::rnd_int(rng, 1, g.n);
    int k = oracles::rnd_int(rng, 1, g.n);
    while (k == i || k == j) k = oracles::rnd_int(rng, 1, g.n);
    int e = oracles::rnd_int(rng, 0, 1) ? 1 : -1;
    int at = oracles::rnd_int(rng, 0, static_cast<int>(g.arrows.size()));
    for (Arrow a : {Arrow{i, j, e}, Arrow{i, k, e}, Arrow{j, k, e}}) {
      g.arrows.insert(g.arrows.begin() + at, a);
      at = oracles::rnd_int(rng, at + 1, static_cast<int>(g.arrows.size()));
    }
    auto sites = enumerate_omega3(g);
    if (sites.empty()) continue;
    ++seen;
    const auto &site = sites[static_cast<size_t>(oracles::rnd_int(
        rng, 0, static_cast<int>(sites.size()) - 1))];
    BraidGaussDiagram h = apply_omega(g, site);
    CHECK(h.perm == g.perm);
    auto key_multiset = [](const BraidGaussDiagram &d) {
      std::vector<std::tuple<int, int, int>> ks;
      for (const auto &a : d.arrows) ks.push_back(arrow_key(a));
      std::sort(ks.begin(), ks.end());
      return ks;
    };
    CHECK(key_multiset(g) == key_multiset(h));
    CHECK_FALSE(canonical_form(g) == canonical_form(h));
  }
  CHECK(seen >= 30);
}

TEST_CASE("stale sites are rejected") {
  BraidGaussDiagram g = word_to_gauss(W("s1 s1'", 2));
  OmegaMoveSite bad;
  bad.kind = OmegaKind::Omega2Delete;
  bad.arrows = {0, 5};
  CHECK_THROWS_AS(apply_omega(g, bad), InapplicableSite);
  bad.arrows = {0, 0};
  CHECK_THROWS_AS(apply_omega(g, bad), InapplicableSite);

  OmegaMoveSite ins;
  ins.kind = OmegaKind::Omega2Insert;
  ins.slot = 9;
  ins.pair = Arrow{1, 2, 1};
  CHECK_THROWS_AS(apply_omega(g, ins), InapplicableSite);
  ins.slot = 0;
  ins.pair = Arrow{1, 1, 1};
  CHECK_THROWS_AS(apply_omega(g, ins), InapplicableSite);

  OmegaMoveSite tri;
  tri.kind = OmegaKind::Omega3;
  tri.arrows = {0, 1, 2};
  CHECK_THROWS_AS(apply_omega(g, tri), InapplicableSite);
}

TEST_CASE("replay folds moves over canonical forms") {
  BraidGaussDiagram start = word_to_gauss(W("s1 s2 s1 s3 s3'", 4));
  // canonical order: (1>2:+)(1>3:+)(1>4:+)(1>4:-)(2>3:+)
  MoveTrace t;
  OmegaMoveSite tri;
  tri.kind = OmegaKind::Omega3;
  tri.arrows = {0, 1, 4};
  tri.forward = true;
  t.steps.push_back(tri);
  // after the block move the pair sits at canonical slots 3,4 again
  OmegaMoveSite del;
  del.kind = OmegaKind::Omega2Delete;
  del.arrows = {3, 4};
  t.steps.push_back(del);
  CHECK(replay(start, t) == canonical_form(W("s2 s1 s2", 4)));
}

TEST_CASE("trace json") {
  MoveTrace t;
  OmegaMoveSite del;
  del.kind = OmegaKind::Omega2Delete;
  del.arrows = {1, 4};
  t.steps.push_back(del);
  OmegaMoveSite ins;
  ins.kind = OmegaKind::Omega2Insert;
  ins.slot = 2;
  ins.pair = Arrow{3, 1, -1};
  t.steps.push_back(ins);
  OmegaMoveSite tri;
  tri.kind = OmegaKind::Omega3;
  tri.arrows = {0, 2, 5};
  tri.forward = false;
  t.steps.push_back(tri);

  std::string j = trace_to_json(t);
  CHECK(j ==
        "[{\"arrows\":[1,4],\"kind\":\"omega2_delete\"},"
        "{\"from\":3,\"kind\":\"omega2_insert\",\"sign\":-1,\"slot\":2,\"to\":1},"
        "{\"arrows\":[0,2,5],\"direction\":\"backward\",\"kind\":\"omega3\"}]");
  MoveTrace back = trace_from_json(j);
  REQUIRE(back.steps.size() == 3);
  CHECK(back.steps[0] == t.steps[0]);
  CHECK(back.steps[1] == t.steps[1]);
  CHECK(back.steps[2] == t.steps[2]);
  CHECK(trace_to_json(MoveTrace{}) == "[]");
  CHECK(trace_from_json("[]").steps.empty());
  CHECK_THROWS_AS(trace_from_json("{\"kind\":1}"), Error);
  CHECK_THROWS_AS(trace_from_json("[{\"kind\":\"nope\"}]"), Error);
}
