#pragma once

#include "vbraid/gauss.hpp"

namespace vbraid {

// Word in virtual letters alone that carries the strand at position x to
// position target.of(x).
BraidWord tau_word_for(const Permutation &target);

// A braid word presenting the diagram, one sigma per arrow:
// canonical_form(word_to_gauss(realize(g))) == canonical_form(g).
// Arrows are emitted in canonical order; virtual letters route the two
// strands of each arrow next to each other, then a tau suffix fixes the
// endpoint permutation.
BraidWord realize(const CanonicalGauss &g);
BraidWord realize(const BraidGaussDiagram &g);

}  // namespace vbraid
