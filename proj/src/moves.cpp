#include "vbraid/moves.hpp"

#include <algorithm>
#include <cstdlib>

#include "json.hpp"

namespace vbraid {

static bool is_tau(const GeneratorLetter &l) { return l.kind == GenKind::Tau; }
static bool is_sigma(const GeneratorLetter &l) { return l.kind == GenKind::Sigma; }

// The four shapes of the mixed relation and its tau-conjugates:
//   1: s_i^e  t_i+1 t_i    ->  t_i+1 t_i    s_i+1^e
//   2: t_i+1  t_i   s_i+1^e -> s_i^e t_i+1  t_i
//   3: t_i    t_i+1 s_i^e  ->  s_i+1^e t_i  t_i+1
//   4: s_i+1^e t_i  t_i+1  ->  t_i   t_i+1  s_i^e
static int mixed_shape(const GeneratorLetter &a, const GeneratorLetter &b,
                       const GeneratorLetter &c) {
  if (is_sigma(a) && is_tau(b) && is_tau(c)) {
    if (b.index == a.index + 1 && c.index == a.index) return 1;
    if (a.index == b.index + 1 && c.index == a.index) return 4;
  }
  if (is_tau(a) && is_tau(b) && is_sigma(c)) {
    if (a.index == b.index + 1 && c.index == a.index) return 2;
    if (b.index == a.index + 1 && c.index == a.index) return 3;
  }
  return 0;
}

BraidWord rewrite_word(const BraidWord &w, const WordMove &m) {
  BraidWord out = w;
  auto &L = out.letters;
  const int len = static_cast<int>(L.size());
  auto need = [](bool ok, const char *msg) {
    if (!ok) throw PatternMismatch(msg);
  };
  switch (m.kind) {
    case WordRuleKind::DistantSwap: {
      need(m.pos >= 0 && m.pos + 2 <= len, "distant swap site out of range");
      need(std::abs(L[m.pos].index - L[m.pos + 1].index) >= 2, "letters are not distant");
      std::swap(L[m.pos], L[m.pos + 1]);
      break;
    }
    case WordRuleKind::BraidTau: {
      need(m.pos >= 0 && m.pos + 3 <= len, "tau braid site out of range");
      GeneratorLetter a = L[m.pos], b = L[m.pos + 1], c = L[m.pos + 2];
      need(is_tau(a) && is_tau(b) && is_tau(c) && a.index == c.index &&
               std::abs(a.index - b.index) == 1,
           "not a tau braid pattern");
      L[m.pos] = b;
      L[m.pos + 1] = a;
      L[m.pos + 2] = b;
      break;
    }
    case WordRuleKind::BraidSigma: {
      need(m.pos >= 0 && m.pos + 3 <= len, "sigma braid site out of range");
      GeneratorLetter a = L[m.pos], b = L[m.pos + 1], c = L[m.pos + 2];
      need(is_sigma(a) && is_sigma(b) && is_sigma(c) && a.index == c.index &&
               std::abs(a.index - b.index) == 1 && a.exponent == b.exponent &&
               b.exponent == c.exponent,
           "not a sigma braid pattern");
      L[m.pos] = b;
      L[m.pos + 1] = a;
      L[m.pos + 2] = b;
      break;
    }
    case WordRuleKind::MixedBraid: {
      need(m.pos >= 0 && m.pos + 3 <= len, "mixed braid site out of range");
      GeneratorLetter a = L[m.pos], b = L[m.pos + 1], c = L[m.pos + 2];
      switch (mixed_shape(a, b, c)) {
        case 1:
          L[m.pos] = tau(a.index + 1);
          L[m.pos + 1] = tau(a.index);
          L[m.pos + 2] = sigma(a.index + 1, a.exponent);
          break;
        case 2:
          L[m.pos] = sigma(b.index, c.exponent);
          L[m.pos + 1] = tau(a.index);
          L[m.pos + 2] = tau(b.index);
          break;
        case 3:
          L[m.pos] = sigma(b.index, c.exponent);
          L[m.pos + 1] = tau(a.index);
          L[m.pos + 2] = tau(b.index);
          break;
        case 4:
          L[m.pos] = tau(b.index);
          L[m.pos + 1] = tau(a.index);
          L[m.pos + 2] = sigma(b.index, a.exponent);
          break;
        default:
          throw PatternMismatch("not a mixed braid pattern");
      }
      break;
    }
    case WordRuleKind::TauSquare: {
      if (m.insert) {
        need(m.pos >= 0 && m.pos <= len, "insert slot out of range");
        need(m.index >= 1 && m.index < out.n, "insert index out of range");
        L.insert(L.begin() + m.pos, {tau(m.index), tau(m.index)});
      } else {
        need(m.pos >= 0 && m.pos + 2 <= len, "tau square site out of range");
        need(is_tau(L[m.pos]) && is_tau(L[m.pos + 1]) &&
                 L[m.pos].index == L[m.pos + 1].index,
             "not a tau square");
        L.erase(L.begin() + m.pos, L.begin() + m.pos + 2);
      }
      break;
    }
    case WordRuleKind::SigmaCancel: {
      if (m.insert) {
        need(m.pos >= 0 && m.pos <= len, "insert slot out of range");
        need(m.index >= 1 && m.index < out.n, "insert index out of range");
        need(m.exponent == 1 || m.exponent == -1, "insert exponent must be +1 or -1");
        L.insert(L.begin() + m.pos,
                 {sigma(m.index, m.exponent), sigma(m.index, -m.exponent)});
      } else {
        need(m.pos >= 0 && m.pos + 2 <= len, "sigma cancel site out of range");
        need(is_sigma(L[m.pos]) && is_sigma(L[m.pos + 1]) &&
                 L[m.pos].index == L[m.pos + 1].index &&
                 L[m.pos].exponent == -L[m.pos + 1].exponent,
             "not a cancelling sigma pair");
        L.erase(L.begin() + m.pos, L.begin() + m.pos + 2);
      }
      break;
    }
  }
  return out;
}

std::vector<WordMove> enumerate_vm_moves(const BraidWord &w, bool include_inserts) {
  std::vector<WordMove> out;
  const auto &L = w.letters;
  const int len = static_cast<int>(L.size());
  for (int p = 0; p + 2 <= len; ++p) {
    if (std::abs(L[p].index - L[p + 1].index) >= 2)
      out.push_back({WordRuleKind::DistantSwap, p, false, 1, 1});
    if (is_tau(L[p]) && is_tau(L[p + 1]) && L[p].index == L[p + 1].index)
      out.push_back({WordRuleKind::TauSquare, p, false, 1, 1});
  }
  for (int p = 0; p + 3 <= len; ++p) {
    const GeneratorLetter &a = L[p], &b = L[p + 1], &c = L[p + 2];
    if (is_tau(a) && is_tau(b) && is_tau(c) && a.index == c.index &&
        std::abs(a.index - b.index) == 1)
      out.push_back({WordRuleKind::BraidTau, p, false, 1, 1});
    if (mixed_shape(a, b, c) != 0)
      out.push_back({WordRuleKind::MixedBraid, p, false, 1, 1});
  }
  if (include_inserts)
    for (int p = 0; p <= len; ++p)
      for (int i = 1; i < w.n; ++i)
        out.push_back({WordRuleKind::TauSquare, p, true, i, 1});
  return out;
}

std::vector<WordMove> enumerate_r3_moves(const BraidWord &w) {
  std::vector<WordMove> out;
  const auto &L = w.letters;
  for (int p = 0; p + 3 <= static_cast<int>(L.size()); ++p) {
    const GeneratorLetter &a = L[p], &b = L[p + 1], &c = L[p + 2];
    if (is_sigma(a) && is_sigma(b) && is_sigma(c) && a.index == c.index &&
        std::abs(a.index - b.index) == 1 && a.exponent == b.exponent &&
        b.exponent == c.exponent)
      out.push_back({WordRuleKind::BraidSigma, p, false, 1, 1});
  }
  return out;
}

std::vector<WordMove> enumerate_r2_deletions(const BraidWord &w) {
  std::vector<WordMove> out;
  const auto &L = w.letters;
  for (int p = 0; p + 2 <= static_cast<int>(L.size()); ++p)
    if (is_sigma(L[p]) && is_sigma(L[p + 1]) && L[p].index == L[p + 1].index &&
        L[p].exponent == -L[p + 1].exponent)
      out.push_back({WordRuleKind::SigmaCancel, p, false, 1, 1});
  return out;
}

// ---- diagram level --------------------------------------------------------

std::vector<std::vector<bool>> dependence_closure(const BraidGaussDiagram &g) {
  const auto &A = g.arrows;
  const size_t m = A.size();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (arrows_dependent(A[i], A[j])) reach[i][j] = true;
  // Edges only point forward, so one ascending sweep closes all paths.
  for (size_t k = 0; k < m; ++k)
    for (size_t i = 0; i < k; ++i)
      if (reach[i][k])
        for (size_t j = k + 1; j < m; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

static bool omega2_pair_blocked(const std::vector<std::vector<bool>> &reach, int i, int j) {
  for (int k = i + 1; k < j; ++k)
    if (reach[i][k] && reach[k][j]) return true;
  return false;
}

std::vector<OmegaMoveSite> enumerate_omega2_deletions(const BraidGaussDiagram &g) {
  auto reach = dependence_closure(g);
  const auto &A = g.arrows;
  const int m = static_cast<int>(A.size());
  std::vector<OmegaMoveSite> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (A[i].from != A[j].from || A[i].to != A[j].to || A[i].sign != -A[j].sign)
        continue;
      if (!omega2_pair_blocked(reach, i, j))
        out.push_back({OmegaKind::Omega2Delete, {i, j}, true, 0, {}});
    }
  return out;
}

std::vector<OmegaMoveSite> enumerate_omega2_insertions(const BraidGaussDiagram &g) {
  std::vector<OmegaMoveSite> out;
  const int m = static_cast<int>(g.arrows.size());
  for (int slot = 0; slot <= m; ++slot)
    for (int f = 1; f <= g.n; ++f)
      for (int t = 1; t <= g.n; ++t) {
        if (f == t) continue;
        out.push_back({OmegaKind::Omega2Insert, {}, true, slot, Arrow{f, t, 1}});
        out.push_back({OmegaKind::Omega2Insert, {}, true, slot, Arrow{f, t, -1}});
      }
  return out;
}

// Matches arrows (ap,aq,ar) against (i>j)(i>k)(j>k) or its reversal.
// Returns +1 forward, -1 backward, 0 neither.
static int omega3_pattern(const Arrow &ap, const Arrow &aq, const Arrow &ar) {
  if (ap.sign != aq.sign || aq.sign != ar.sign) return 0;
  if (ap.from == aq.from && ar.from == ap.to && ar.to == aq.to && ap.to != aq.to)
    return 1;
  if (ar.from == aq.from && ap.from == ar.to && ap.to == aq.to && ar.to != aq.to)
    return -1;
  return 0;
}

static bool omega3_block_free(const std::vector<std::vector<bool>> &reach, int m, int p,
                              int q, int r) {
  for (int x = 0; x < m; ++x) {
    if (x == p || x == q || x == r) continue;
    bool after = reach[p][x] || reach[q][x] || reach[r][x];
    bool before = reach[x][p] || reach[x][q] || reach[x][r];
    if (after && before) return false;
  }
  return true;
}

std::vector<OmegaMoveSite> enumerate_omega3(const BraidGaussDiagram &g) {
  auto reach = dependence_closure(g);
  const auto &A = g.arrows;
  const int m = static_cast<int>(A.size());
  std::vector<OmegaMoveSite> out;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      for (int r = q + 1; r < m; ++r) {
        int dir = omega3_pattern(A[p], A[q], A[r]);
        if (dir == 0) continue;
        if (!omega3_block_free(reach, m, p, q, r)) continue;
        out.push_back({OmegaKind::Omega3, {p, q, r}, dir > 0, 0, {}});
      }
  return out;
}

BraidGaussDiagram apply_omega(const BraidGaussDiagram &g, const OmegaMoveSite &site) {
  const auto &A = g.arrows;
  const int m = static_cast<int>(A.size());
  auto need = [](bool ok, const char *msg) {
    if (!ok) throw InapplicableSite(msg);
  };
  switch (site.kind) {
    case OmegaKind::Omega2Delete: {
      need(site.arrows.size() == 2, "omega2 deletion takes two arrow indices");
      int i = std::min(site.arrows[0], site.arrows[1]);
      int j = std::max(site.arrows[0], site.arrows[1]);
      need(i >= 0 && j < m && i != j, "arrow index out of range");
      need(A[i].from == A[j].from && A[i].to == A[j].to && A[i].sign == -A[j].sign,
           "arrows do not form a cancelling pair");
      need(!omega2_pair_blocked(dependence_closure(g), i, j),
           "an arrow is pinned between the pair");
      BraidGaussDiagram out = g;
      out.arrows.erase(out.arrows.begin() + j);
      out.arrows.erase(out.arrows.begin() + i);
      return out;
    }
    case OmegaKind::Omega2Insert: {
      need(site.slot >= 0 && site.slot <= m, "insert slot out of range");
      const Arrow &a = site.pair;
      need(a.from >= 1 && a.from <= g.n && a.to >= 1 && a.to <= g.n && a.from != a.to,
           "arrow endpoints out of range");
      need(a.sign == 1 || a.sign == -1, "arrow sign must be +1 or -1");
      BraidGaussDiagram out = g;
      out.arrows.insert(out.arrows.begin() + site.slot,
                        {a, Arrow{a.from, a.to, -a.sign}});
      return out;
    }
    case OmegaKind::Omega3: {
      need(site.arrows.size() == 3, "omega3 takes three arrow indices");
      int p = site.arrows[0], q = site.arrows[1], r = site.arrows[2];
      need(p >= 0 && p < q && q < r && r < m, "arrow indices must be ascending");
      int dir = omega3_pattern(A[p], A[q], A[r]);
      need(dir == (site.forward ? 1 : -1), "arrows do not form the claimed braid block");
      auto reach = dependence_closure(g);
      need(omega3_block_free(reach, m, p, q, r), "block is pinned by an outside arrow");
      // Everything forced after an element of the block goes after the
      // reversed block; everything else keeps its place in front.
      BraidGaussDiagram out{g.n, {}, g.perm};
      out.arrows.reserve(A.size());
      std::vector<int> tail;
      for (int x = 0; x < m; ++x) {
        if (x == p || x == q || x == r) continue;
        if (reach[p][x] || reach[q][x] || reach[r][x])
          tail.push_back(x);
        else
          out.arrows.push_back(A[x]);
      }
      out.arrows.push_back(A[r]);
      out.arrows.push_back(A[q]);
      out.arrows.push_back(A[p]);
      for (int x : tail) out.arrows.push_back(A[x]);
      return out;
    }
  }
  throw InapplicableSite("unknown move kind");
}

CanonicalGauss replay(const BraidGaussDiagram &g, const MoveTrace &trace) {
  CanonicalGauss state = canonical_form(g);
  for (const auto &s : trace.steps)
    state = canonical_form(apply_omega(state.diagram(), s));
  return state;
}

std::string trace_to_json(const MoveTrace &t) {
  auto arr = nlohmann::json::array();
  for (const auto &s : t.steps) {
    nlohmann::json j;
    switch (s.kind) {
      case OmegaKind::Omega2Delete:
        j["kind"] = "omega2_delete";
        j["arrows"] = s.arrows;
        break;
      case OmegaKind::Omega2Insert:
        j["kind"] = "omega2_insert";
        j["slot"] = s.slot;
        j["from"] = s.pair.from;
        j["to"] = s.pair.to;
        j["sign"] = s.pair.sign;
        break;
      case OmegaKind::Omega3:
        j["kind"] = "omega3";
        j["arrows"] = s.arrows;
        j["direction"] = s.forward ? "forward" : "backward";
        break;
    }
    arr.push_back(j);
  }
  return arr.dump();
}

MoveTrace trace_from_json(const std::string &text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(ParseCode::Malformed, std::string("bad json: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError(ParseCode::Malformed, "trace json must be an array");
  MoveTrace t;
  for (const auto &j : arr) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
      throw ParseError(ParseCode::Malformed, "trace step needs a kind");
    std::string kind = j["kind"].get<std::string>();
    OmegaMoveSite s;
    if (kind == "omega2_delete") {
      s.kind = OmegaKind::Omega2Delete;
      if (!j.contains("arrows") || !j["arrows"].is_array() || j["arrows"].size() != 2)
        throw ParseError(ParseCode::Malformed, "omega2_delete needs two arrow indices");
      s.arrows = j["arrows"].get<std::vector<int>>();
    } else if (kind == "omega2_insert") {
      s.kind = OmegaKind::Omega2Insert;
      if (!j.contains("slot") || !j.contains("from") || !j.contains("to") ||
          !j.contains("sign"))
        throw ParseError(ParseCode::Malformed, "omega2_insert needs slot, from, to, sign");
      s.slot = j["slot"].get<int>();
      s.pair = Arrow{j["from"].get<int>(), j["to"].get<int>(), j["sign"].get<int>()};
    } else if (kind == "omega3") {
      s.kind = OmegaKind::Omega3;
      if (!j.contains("arrows") || !j["arrows"].is_array() || j["arrows"].size() != 3 ||
          !j.contains("direction") || !j["direction"].is_string())
        throw ParseError(ParseCode::Malformed, "omega3 needs three arrow indices and a direction");
      s.arrows = j["arrows"].get<std::vector<int>>();
      std::string dir = j["direction"].get<std::string>();
      if (dir != "forward" && dir != "backward")
        throw ParseError(ParseCode::Malformed, "omega3 direction must be forward or backward");
      s.forward = dir == "forward";
    } else {
      throw ParseError(ParseCode::Malformed, "unknown trace step kind '" + kind + "'");
    }
    t.steps.push_back(std::move(s));
  }
  return t;
}

}  // namespace vbraid
