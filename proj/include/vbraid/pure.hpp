#pragma once

#include <string>
#include <vector>

#include "vbraid/moves.hpp"

namespace vbraid {

// Generator a_{ij}^e of the pure subgroup: strand i crosses over strand j and
// both return to their own positions. As a diagram, a single arrow (i>j:e)
// with identity permutation.
struct PureLetter {
  int i = 1;
  int j = 2;
  int exponent = 1;

  friend bool operator==(const PureLetter &, const PureLetter &) = default;
};

struct PureWord {
  int n = 2;
  std::vector<PureLetter> letters;
};

bool is_pure(const BraidWord &w);

// Decomposes a pure braid word into a_{ij} generators, one per arrow of its
// diagram. Throws NotPure when the endpoint permutation is not the identity.
PureWord to_pure_word(const BraidWord &w);

BraidGaussDiagram pure_to_gauss(const PureWord &w);

// One defining relation checked concretely: lhs and rhs as diagrams plus the
// certificate that turns one into the other.
struct PvInstance {
  std::string relation;     // "triangle" or "commute"
  std::vector<int> indices; // (i,j,k) or (i,j,k,l)
  bool ok = false;
  MoveTrace trace;
};

struct PvReport {
  int n = 2;
  bool ok = false;
  std::vector<PvInstance> instances;
};

// Checks the defining relations of the pure subgroup on n strands:
//   triangle   a_ij a_ik a_jk = a_jk a_ik a_ij       (ordered distinct i,j,k)
//   commute    a_ij a_kl = a_kl a_ij                 ({i,j} disjoint from {k,l})
// Triangles are certified by a single braid-block move; `depth` bounds the
// fallback search should the direct certificate ever fail to apply.
PvReport verify_pv_presentation(int n, int depth = 64);

std::string pv_report_to_json(const PvReport &r);

}  // namespace vbraid
