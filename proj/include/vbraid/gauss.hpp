#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "vbraid/word.hpp"

namespace vbraid {

// Arrow of a braid-Gauss diagram: a crossing where strand `from` passes over
// strand `to`, signed by the writhe. Strands are named by starting position.
struct Arrow {
  int from = 1;
  int to = 2;
  int sign = 1;

  friend bool operator==(const Arrow &, const Arrow &) = default;
};

// Sort key for the canonical form. Positive crossings order before negative,
// so no defaulted <=> here.
inline std::tuple<int, int, int> arrow_key(const Arrow &a) {
  return {a.from, a.to, a.sign > 0 ? 0 : 1};
}

// Arrows commute iff their strand sets are disjoint.
bool arrows_dependent(const Arrow &a, const Arrow &b);

struct BraidGaussDiagram {
  int n = 1;
  std::vector<Arrow> arrows;  // in time order along the braid
  Permutation perm;

  friend bool operator==(const BraidGaussDiagram &, const BraidGaussDiagram &) = default;
};

BraidGaussDiagram identity_diagram(int n);

BraidGaussDiagram word_to_gauss(const BraidWord &w);

// Normal form under commutation of independent arrows: the lexicographically
// least linearization (by arrow_key) of the dependence order. Two diagrams
// present the same virtual-move class iff their canonical forms are equal.
struct CanonicalGauss {
  int n = 1;
  std::vector<Arrow> arrows;
  Permutation perm;

  BraidGaussDiagram diagram() const { return BraidGaussDiagram{n, arrows, perm}; }

  friend bool operator==(const CanonicalGauss &, const CanonicalGauss &) = default;
};

CanonicalGauss canonical_form(const BraidGaussDiagram &g);
CanonicalGauss canonical_form(const BraidWord &w);

bool vm_equivalent(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2);
bool vm_equivalent(const BraidWord &w1, const BraidWord &w2);

BraidGaussDiagram compose(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2);
BraidGaussDiagram inverse(const BraidGaussDiagram &g);

// Text format: "n=2; perm=2,1; arrows=(1>2:+)(1>2:-)". An arrowless diagram
// ends with "arrows=".
std::string gauss_to_text(const BraidGaussDiagram &g);
BraidGaussDiagram gauss_from_text(const std::string &text);

std::string gauss_to_json(const BraidGaussDiagram &g);
BraidGaussDiagram gauss_from_json(const std::string &text);

}  // namespace vbraid
