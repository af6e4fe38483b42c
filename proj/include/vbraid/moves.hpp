#pragma once

#include <string>
#include <vector>

#include "vbraid/gauss.hpp"

namespace vbraid {

// ---- word level -----------------------------------------------------------

enum class WordRuleKind {
  BraidSigma,   // s_i^e s_j^e s_i^e <-> s_j^e s_i^e s_j^e, |i-j|=1 (an R-move)
  BraidTau,     // t_i t_j t_i <-> t_j t_i t_j, |i-j|=1
  MixedBraid,   // s_i^e t_{i+1} t_i <-> t_{i+1} t_i s_{i+1}^e and mirrors
  DistantSwap,  // x_i y_j <-> y_j x_i, |i-j|>=2
  TauSquare,    // t_i t_i <-> 1
  SigmaCancel,  // s_i^e s_i^-e <-> 1 (an R-move)
};

struct WordMove {
  WordRuleKind kind = WordRuleKind::DistantSwap;
  int pos = 0;        // letter position, or insertion slot for inserts
  bool insert = false;  // TauSquare / SigmaCancel
  int index = 1;      // generator index, inserts only
  int exponent = 1;   // sign of the first inserted sigma, SigmaCancel only
};

// Applies the move, validating the pattern at m.pos. Throws PatternMismatch.
BraidWord rewrite_word(const BraidWord &w, const WordMove &m);

// Every applicable virtual-move site: BraidTau, MixedBraid, DistantSwap and
// TauSquare deletions, plus (optionally) TauSquare insertions at every slot.
// BraidSigma and SigmaCancel are deliberately absent: those change the braid
// only up to R-equivalence, not as a diagram.
std::vector<WordMove> enumerate_vm_moves(const BraidWord &w, bool include_inserts = true);

std::vector<WordMove> enumerate_r3_moves(const BraidWord &w);
std::vector<WordMove> enumerate_r2_deletions(const BraidWord &w);

// ---- diagram level --------------------------------------------------------

enum class OmegaKind { Omega2Delete, Omega2Insert, Omega3 };

struct OmegaMoveSite {
  OmegaKind kind = OmegaKind::Omega2Delete;
  std::vector<int> arrows;  // 0-based indices into the arrow list, ascending
  bool forward = true;      // Omega3: block reads (i>j)(i>k)(j>k) left to right
  int slot = 0;             // Omega2Insert: 0..#arrows
  Arrow pair;               // Omega2Insert: first of the two inserted arrows

  friend bool operator==(const OmegaMoveSite &, const OmegaMoveSite &) = default;
};

// closure[i][j] (i<j) — arrow i is forced before arrow j in every
// linearization of the diagram's dependence order.
std::vector<std::vector<bool>> dependence_closure(const BraidGaussDiagram &g);

std::vector<OmegaMoveSite> enumerate_omega2_deletions(const BraidGaussDiagram &g);
std::vector<OmegaMoveSite> enumerate_omega2_insertions(const BraidGaussDiagram &g);
std::vector<OmegaMoveSite> enumerate_omega3(const BraidGaussDiagram &g);

// Validates the site against g and applies it. Throws InapplicableSite.
BraidGaussDiagram apply_omega(const BraidGaussDiagram &g, const OmegaMoveSite &site);

struct MoveTrace {
  std::vector<OmegaMoveSite> steps;
};

// Folds canonical_form(apply_omega(...)) over the steps; indices in each step
// refer to the canonical arrow order of the state it is applied to.
CanonicalGauss replay(const BraidGaussDiagram &g, const MoveTrace &trace);

std::string trace_to_json(const MoveTrace &t);
MoveTrace trace_from_json(const std::string &text);

}  // namespace vbraid
