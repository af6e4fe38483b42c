#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vbraid/moves.hpp"
#include "vbraid/surface.hpp"

using namespace vbraid;

TEST_CASE("euler data on pinned words") {
  SurfaceSummary id1 = surface_summary(parse_word("", 1));
  CHECK(id1.vertices == 2);
  CHECK(id1.edges == 3);
  CHECK(id1.faces == 3);
  CHECK(id1.genus == 0);
  CHECK(id1.c0_face != id1.c1_face);

  SurfaceSummary t1 = surface_summary(parse_word("t1", 2));
  CHECK(t1.vertices == 4);
  CHECK(t1.edges == 6);
  CHECK(t1.faces == 4);
  CHECK(t1.genus == 0);

  CHECK(word_genus(parse_word("s1 t1", 2)) == 0);

  SurfaceSummary w4 = surface_summary(parse_word("t1 s1 t1 s1", 2));
  CHECK(w4.vertices == 6);
  CHECK(w4.edges == 10);
  CHECK(w4.faces == 6);
  CHECK(w4.genus == 0);

  SurfaceSummary g2 = surface_summary(parse_word("t2 s1 t3 s3 t1 t2", 4));
  CHECK(g2.vertices == 10);
  CHECK(g2.edges == 16);
  CHECK(g2.faces == 4);
  CHECK(g2.genus == 2);
}

TEST_CASE("face count against the string tracer") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 250; ++trial) {
    int n = oracles::rnd_int(rng, 1, 6);
    BraidWord w = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 20));
    RibbonGraph rg = build_ribbon_graph(w);
    auto faces = boundary_components(rg);
    CHECK(static_cast<int>(faces.size()) == oracles::trace_faces(rg));
    CHECK(word_genus(w) == oracles::oracle_genus(w));
    SurfaceSummary s = surface_summary(w);
    CHECK(s.c0_face != s.c1_face);
    CHECK(s.genus >= 0);
  }
}

TEST_CASE("classical words bound disks") {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracles::rnd_int(rng, 2, 5);
    std::vector<GeneratorLetter> ls;
    int len = oracles::rnd_int(rng, 0, 10);
    for (int i = 0; i < len; ++i)
      ls.push_back(sigma(oracles::rnd_int(rng, 1, n - 1),
                         oracles::rnd_int(rng, 0, 1) ? 1 : -1));
    CHECK(word_genus(make_word(n, ls)) == 0);
  }
}

TEST_CASE("canonical genus is a class invariant") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    int n = oracles::rnd_int(rng, 2, 5);
    BraidWord w = oracles::random_word(rng, n, oracles::rnd_int(rng, 0, 12));
    int g = canonical_genus(w);
    BraidWord cur = w;
    for (int step = 0; step < 6; ++step) {
      auto moves = enumerate_vm_moves(cur);
      if (moves.empty()) break;
      cur = rewrite_word(cur, moves[static_cast<size_t>(oracles::rnd_int(
                                  rng, 0, static_cast<int>(moves.size()) - 1))]);
    }
    CHECK(canonical_genus(cur) == g);
  }
  // the genus of the word as drawn is *not* that invariant
  CHECK(word_genus(parse_word("t2 s1 t3 s3 t1 t2", 4)) == 2);
  CHECK(canonical_genus(parse_word("t2 s1 t3 s3 t1 t2", 4)) == 2);
}

TEST_CASE("graph export") {
  RibbonGraph rg = build_ribbon_graph(parse_word("", 1));
  std::string text = graph_to_text(rg);
  CHECK(text ==
        "ribbon n=1 vertices=2 edges=3\n"
        "v 0 c0 0 1 2\n"
        "v 1 c1 3 4 5\n"
        "e 0 2 arc0\n"
        "e 3 4 arc1\n"
        "e 1 5 strand\n");
}

TEST_CASE("malformed rotation systems are rejected") {
  RibbonGraph bad;
  bad.n = 1;
  bad.rotations = {{0, 1}, {2}};
  bad.partner = {1, 0, 2};  // 2 partners itself
  bad.edge_kinds = {EdgeKind::Strand, EdgeKind::Strand, EdgeKind::Strand};
  CHECK_THROWS_AS(boundary_components(bad), MalformedRotation);
}
