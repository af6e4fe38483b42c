#include "vbraid/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <utility>

#include "vbraid/realize.hpp"
#include "vbraid/surface.hpp"

namespace vbraid {

static long long total_writhe(const CanonicalGauss &g) {
  long long s = 0;
  for (const Arrow &a : g.arrows) s += a.sign;
  return s;
}

static std::map<std::pair<int, int>, long long> pair_writhe(const CanonicalGauss &g) {
  std::map<std::pair<int, int>, long long> m;
  for (const Arrow &a : g.arrows)
    m[{std::min(a.from, a.to), std::max(a.from, a.to)}] += a.sign;
  return m;
}

static std::string perm_text(const Permutation &p) {
  std::string s;
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string(p.of(k));
  }
  return s;
}

static bool invariants_split(const CanonicalGauss &a, const CanonicalGauss &b,
                             InequivalenceCertificate &cert) {
  if (!(a.perm == b.perm)) {
    cert = {"permutation", "lhs=" + perm_text(a.perm) + " rhs=" + perm_text(b.perm)};
    return true;
  }
  long long wa = total_writhe(a), wb = total_writhe(b);
  if (wa != wb) {
    cert = {"writhe", "lhs=" + std::to_string(wa) + " rhs=" + std::to_string(wb)};
    return true;
  }
  if (a.perm.is_identity() && b.perm.is_identity()) {
    auto ma = pair_writhe(a), mb = pair_writhe(b);
    std::set<std::pair<int, int>> keys;
    for (const auto &e : ma) keys.insert(e.first);
    for (const auto &e : mb) keys.insert(e.first);
    for (const auto &k : keys) {
      long long va = ma.count(k) ? ma.at(k) : 0;
      long long vb = mb.count(k) ? mb.at(k) : 0;
      if (va != vb) {
        cert = {"pair_writhe", "pair {" + std::to_string(k.first) + "," +
                                   std::to_string(k.second) + "}: lhs=" + std::to_string(va) +
                                   " rhs=" + std::to_string(vb)};
        return true;
      }
    }
  }
  return false;
}

static std::string state_key(const CanonicalGauss &g) { return gauss_to_text(g.diagram()); }

// Forward moves out of a state: shrink first, then rearrange, then grow
// (growth only while the result stays under the arrow cap).
static std::vector<OmegaMoveSite> forward_sites(const BraidGaussDiagram &d, size_t cap) {
  std::vector<OmegaMoveSite> out = enumerate_omega2_deletions(d);
  auto o3 = enumerate_omega3(d);
  out.insert(out.end(), o3.begin(), o3.end());
  if (d.arrows.size() + 2 <= cap) {
    auto ins = enumerate_omega2_insertions(d);
    out.insert(out.end(), ins.begin(), ins.end());
  }
  return out;
}

namespace {

struct PathEntry {
  std::string parent;  // empty at the root
  OmegaMoveSite move;
  CanonicalGauss state;
};

using Frontier = std::priority_queue<std::pair<size_t, std::string>,
                                     std::vector<std::pair<size_t, std::string>>,
                                     std::greater<>>;

}  // namespace

// States T with a verified forward move T -> s, for the backward frontier.
// Omega2 insertions into a canonical form cannot express every way of undoing
// a deletion, so each candidate edge is checked by replaying it; candidates
// with no expressible forward move are dropped.
static std::vector<std::pair<CanonicalGauss, OmegaMoveSite>> predecessor_edges(
    const CanonicalGauss &s, size_t cap) {
  std::vector<std::pair<CanonicalGauss, OmegaMoveSite>> out;
  const BraidGaussDiagram sd = s.diagram();
  const std::string ks = state_key(s);
  for (const auto &del : enumerate_omega2_deletions(sd)) {
    CanonicalGauss t = canonical_form(apply_omega(sd, del));
    const Arrow &first = sd.arrows[static_cast<size_t>(del.arrows[0])];
    bool found = false;
    for (int slot = 0; slot <= static_cast<int>(t.arrows.size()) && !found; ++slot)
      for (int sgn : {first.sign, -first.sign}) {
        OmegaMoveSite cand{OmegaKind::Omega2Insert, {}, true, slot,
                           Arrow{first.from, first.to, sgn}};
        if (state_key(canonical_form(apply_omega(t.diagram(), cand))) == ks) {
          out.emplace_back(std::move(t), cand);
          found = true;
          break;
        }
      }
  }
  for (const auto &site : enumerate_omega3(sd)) {
    CanonicalGauss t = canonical_form(apply_omega(sd, site));
    for (const auto &cand : enumerate_omega3(t.diagram())) {
      if (state_key(canonical_form(apply_omega(t.diagram(), cand))) == ks) {
        out.emplace_back(std::move(t), cand);
        break;
      }
    }
  }
  if (sd.arrows.size() + 2 <= cap) {
    for (const auto &ins : enumerate_omega2_insertions(sd)) {
      CanonicalGauss t = canonical_form(apply_omega(sd, ins));
      for (const auto &del : enumerate_omega2_deletions(t.diagram())) {
        const Arrow &a = t.arrows[static_cast<size_t>(del.arrows[0])];
        if (a.from != ins.pair.from || a.to != ins.pair.to) continue;
        if (state_key(canonical_form(apply_omega(t.diagram(), del))) == ks) {
          out.emplace_back(std::move(t), del);
          break;
        }
      }
    }
  }
  return out;
}

RResult r_equivalent_bounded(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2,
                             const Budget &budget) {
  if (g1.n != g2.n)
    throw StrandCountMismatch("cannot compare diagrams on different strand counts");
  RResult res;
  CanonicalGauss c1 = canonical_form(g1);
  CanonicalGauss c2 = canonical_form(g2);
  if (invariants_split(c1, c2, res.certificate)) {
    res.status = RStatus::Inequivalent;
    return res;
  }
  const std::string k1 = state_key(c1);
  const std::string k2 = state_key(c2);
  if (k1 == k2) {
    res.status = RStatus::Equivalent;
    return res;
  }
  const size_t cap =
      std::max(c1.arrows.size(), c2.arrows.size()) +
      static_cast<size_t>(std::max(0, budget.insert_slack));
  std::unordered_map<std::string, PathEntry> visited[2];
  Frontier frontier[2];
  visited[0][k1] = {"", {}, c1};
  visited[1][k2] = {"", {}, c2};
  frontier[0].push({c1.arrows.size(), k1});
  frontier[1].push({c2.arrows.size(), k2});
  int pops[2] = {0, 0};
  std::string meet;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (budget.time_limit_ms <= 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return ms >= budget.time_limit_ms;
  };
  while (meet.empty() && (!frontier[0].empty() || !frontier[1].empty())) {
    if (res.nodes_expanded >= budget.max_nodes || out_of_time()) break;
    int side;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = pops[0] <= pops[1] ? 0 : 1;
    std::string key = frontier[side].top().second;
    frontier[side].pop();
    ++pops[side];
    ++res.nodes_expanded;
    CanonicalGauss state = visited[side].at(key).state;
    if (side == 0) {
      BraidGaussDiagram d = state.diagram();
      for (const auto &site : forward_sites(d, cap)) {
        CanonicalGauss next = canonical_form(apply_omega(d, site));
        std::string nk = state_key(next);
        if (visited[0].count(nk)) continue;
        visited[0][nk] = {key, site, next};
        if (visited[1].count(nk)) {
          meet = nk;
          break;
        }
        frontier[0].push({next.arrows.size(), nk});
      }
    } else {
      for (auto &[prev, fwd] : predecessor_edges(state, cap)) {
        std::string nk = state_key(prev);
        if (visited[1].count(nk)) continue;
        visited[1][nk] = {key, fwd, prev};
        if (visited[0].count(nk)) {
          meet = nk;
          break;
        }
        frontier[1].push({prev.arrows.size(), nk});
      }
    }
  }
  if (meet.empty()) {
    res.status = RStatus::Unknown;
    return res;
  }
  res.status = RStatus::Equivalent;
  std::vector<OmegaMoveSite> head;  // lhs -> meet, collected backwards
  for (std::string k = meet; !visited[0].at(k).parent.empty(); k = visited[0].at(k).parent)
    head.push_back(visited[0].at(k).move);
  std::reverse(head.begin(), head.end());
  res.trace.steps = std::move(head);
  // Backward entries store the forward move toward their parent, so the walk
  // from the meeting state to rhs reads off in order.
  for (std::string k = meet; !visited[1].at(k).parent.empty(); k = visited[1].at(k).parent)
    res.trace.steps.push_back(visited[1].at(k).move);
  return res;
}

RResult r_equivalent_bounded(const BraidWord &w1, const BraidWord &w2, const Budget &budget) {
  return r_equivalent_bounded(word_to_gauss(w1), word_to_gauss(w2), budget);
}

GenusResult min_genus_bounded(const BraidGaussDiagram &g, const Budget &budget) {
  CanonicalGauss root = canonical_form(g);
  const size_t cap =
      root.arrows.size() + static_cast<size_t>(std::max(0, budget.insert_slack));
  GenusResult res;
  std::unordered_map<std::string, CanonicalGauss> visited;
  // priority: (genus, arrows, key) so cheap flat states are tried first
  std::priority_queue<std::tuple<int, size_t, std::string>,
                      std::vector<std::tuple<int, size_t, std::string>>, std::greater<>>
      frontier;
  BraidWord root_word = realize(root);
  res.genus = word_genus(root_word);
  res.witness = root_word;
  const std::string rk = state_key(root);
  visited.emplace(rk, root);
  frontier.push({res.genus, root.arrows.size(), rk});
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (budget.time_limit_ms <= 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return ms >= budget.time_limit_ms;
  };
  while (!frontier.empty()) {
    if (res.nodes_expanded >= budget.max_nodes || out_of_time()) break;
    std::string key = std::get<2>(frontier.top());
    frontier.pop();
    ++res.nodes_expanded;
    BraidGaussDiagram d = visited.at(key).diagram();
    for (const auto &site : forward_sites(d, cap)) {
      CanonicalGauss next = canonical_form(apply_omega(d, site));
      std::string nk = state_key(next);
      if (visited.count(nk)) continue;
      BraidWord w = realize(next);
      int genus = word_genus(w);
      if (genus < res.genus) {
        res.genus = genus;
        res.witness = w;
      }
      visited.emplace(nk, std::move(next));
      frontier.push({genus, static_cast<size_t>(
                                visited.at(nk).arrows.size()),
                     nk});
    }
  }
  return res;
}

GenusResult min_genus_bounded(const BraidWord &w, const Budget &budget) {
  return min_genus_bounded(word_to_gauss(w), budget);
}

}  // namespace vbraid
