#pragma once

#include <string>

#include "vbraid/moves.hpp"

namespace vbraid {

struct Budget {
  int max_nodes = 2000;   // total states expanded across both frontiers
  int insert_slack = 2;   // arrows a state may grow beyond the larger input
  int time_limit_ms = 0;  // 0 keeps the search fully deterministic
};

enum class RStatus { Equivalent, Inequivalent, Unknown };

struct InequivalenceCertificate {
  std::string invariant;  // "permutation", "writhe" or "pair_writhe"
  std::string details;
};

struct RResult {
  RStatus status = RStatus::Unknown;
  MoveTrace trace;                       // Equivalent: replays lhs into rhs
  InequivalenceCertificate certificate;  // Inequivalent
  int nodes_expanded = 0;
};

// Bounded bidirectional best-first search over canonical forms. Equivalent
// and Inequivalent answers are exact; Unknown means the budget ran out.
RResult r_equivalent_bounded(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2,
                             const Budget &budget = {});
RResult r_equivalent_bounded(const BraidWord &w1, const BraidWord &w2,
                             const Budget &budget = {});

struct GenusResult {
  int genus = 0;
  BraidWord witness;  // presentation realizing the reported genus
  int nodes_expanded = 0;
};

// Smallest canonical genus over the states reachable within the budget.
// An upper bound for the class; exact only if the true minimum is reached.
GenusResult min_genus_bounded(const BraidGaussDiagram &g, const Budget &budget = {});
GenusResult min_genus_bounded(const BraidWord &w, const Budget &budget = {});

}  // namespace vbraid
