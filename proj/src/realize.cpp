#include "vbraid/realize.hpp"

#include <numeric>
#include <utility>

namespace vbraid {

BraidWord tau_word_for(const Permutation &target) {
  const int n = target.size();
  Permutation want = inverse(target);  // position x must end up holding cur[want.of(x)]
  std::vector<int> cur(static_cast<size_t>(n) + 1);
  std::iota(cur.begin(), cur.end(), 0);
  BraidWord w{n, {}};
  for (int x = 1; x <= n; ++x) {
    int j = x;
    while (cur[static_cast<size_t>(j)] != want.of(x)) ++j;
    for (int k = j - 1; k >= x; --k) {
      w.letters.push_back(tau(k));
      std::swap(cur[static_cast<size_t>(k)], cur[static_cast<size_t>(k) + 1]);
    }
  }
  return w;
}

BraidWord realize(const CanonicalGauss &g) {
  const int n = g.n;
  std::vector<int> strand_at(static_cast<size_t>(n) + 1);
  std::vector<int> pos_of(static_cast<size_t>(n) + 1);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::iota(pos_of.begin(), pos_of.end(), 0);
  BraidWord w{n, {}};
  auto swap_at = [&](int p) {
    int a = strand_at[static_cast<size_t>(p)];
    int b = strand_at[static_cast<size_t>(p) + 1];
    strand_at[static_cast<size_t>(p)] = b;
    strand_at[static_cast<size_t>(p) + 1] = a;
    pos_of[static_cast<size_t>(a)] = p + 1;
    pos_of[static_cast<size_t>(b)] = p;
  };
  for (const Arrow &a : g.arrows) {
    // The under strand enters the crossing from the upper position for a
    // positive sign, the over strand for a negative one.
    int upper = a.sign > 0 ? a.to : a.from;
    int lower = a.sign > 0 ? a.from : a.to;
    int pu = pos_of[static_cast<size_t>(upper)];
    int pl = pos_of[static_cast<size_t>(lower)];
    if (pu > pl) {
      for (int j = pu - 1; j >= pl + 1; --j) {
        w.letters.push_back(tau(j));
        swap_at(j);
      }
      w.letters.push_back(sigma(pl, a.sign));
      swap_at(pl);
    } else {
      for (int j = pu; j <= pl - 1; ++j) {
        w.letters.push_back(tau(j));
        swap_at(j);
      }
      w.letters.push_back(sigma(pl - 1, a.sign));
      swap_at(pl - 1);
    }
  }
  std::vector<int> im(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x)
    im[static_cast<size_t>(x) - 1] = g.perm.of(strand_at[static_cast<size_t>(x)]);
  BraidWord suffix = tau_word_for(Permutation{std::move(im)});
  w.letters.insert(w.letters.end(), suffix.letters.begin(), suffix.letters.end());
  return w;
}

BraidWord realize(const BraidGaussDiagram &g) { return realize(canonical_form(g)); }

}  // namespace vbraid
