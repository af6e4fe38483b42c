#include "vbraid/gauss.hpp"

#include <cctype>
#include <utility>

#include "json.hpp"

namespace vbraid {

bool arrows_dependent(const Arrow &a, const Arrow &b) {
  return a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to;
}

static void check_diagram(const BraidGaussDiagram &g) {
  if (g.n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  if (g.perm.size() != g.n)
    throw ParseError(ParseCode::Malformed, "perm length does not match n");
  std::vector<bool> seen(static_cast<size_t>(g.n), false);
  for (int k = 1; k <= g.n; ++k) {
    int v = g.perm.of(k);
    if (v < 1 || v > g.n || seen[static_cast<size_t>(v) - 1])
      throw ParseError(ParseCode::Malformed, "perm is not a bijection on 1..n");
    seen[static_cast<size_t>(v) - 1] = true;
  }
  for (const Arrow &a : g.arrows) {
    if (a.from < 1 || a.from > g.n || a.to < 1 || a.to > g.n || a.from == a.to)
      throw ParseError(ParseCode::IndexOutOfRange, "arrow endpoints out of range");
    if (a.sign != 1 && a.sign != -1)
      throw ParseError(ParseCode::Malformed, "arrow sign must be +1 or -1");
  }
}

BraidGaussDiagram identity_diagram(int n) {
  if (n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  return BraidGaussDiagram{n, {}, Permutation::identity(n)};
}

BraidGaussDiagram word_to_gauss(const BraidWord &w) {
  if (w.n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  std::vector<int> strand_at(static_cast<size_t>(w.n) + 1);
  for (int p = 1; p <= w.n; ++p) strand_at[static_cast<size_t>(p)] = p;
  std::vector<Arrow> arrows;
  for (const auto &l : w.letters) {
    if (l.index < 1 || l.index >= w.n)
      throw ParseError(ParseCode::IndexOutOfRange,
                       "letter index out of range for n=" + std::to_string(w.n));
    int lo = strand_at[static_cast<size_t>(l.index)];
    int hi = strand_at[static_cast<size_t>(l.index) + 1];
    if (l.kind == GenKind::Sigma) {
      if (l.exponent != 1 && l.exponent != -1)
        throw ParseError(ParseCode::Malformed, "exponent must be +1 or -1");
      // The over strand of s_i is the one entering at position i; of s_i'
      // the one entering at position i+1.
      if (l.exponent > 0)
        arrows.push_back(Arrow{lo, hi, 1});
      else
        arrows.push_back(Arrow{hi, lo, -1});
    }
    std::swap(strand_at[static_cast<size_t>(l.index)],
              strand_at[static_cast<size_t>(l.index) + 1]);
  }
  std::vector<int> im(static_cast<size_t>(w.n));
  for (int p = 1; p <= w.n; ++p)
    im[static_cast<size_t>(strand_at[static_cast<size_t>(p)]) - 1] = p;
  return BraidGaussDiagram{w.n, std::move(arrows), Permutation{std::move(im)}};
}

CanonicalGauss canonical_form(const BraidGaussDiagram &g) {
  const auto &arr = g.arrows;
  const size_t m = arr.size();
  std::vector<bool> used(m, false);
  std::vector<Arrow> out;
  out.reserve(m);
  for (size_t step = 0; step < m; ++step) {
    size_t best = m;
    for (size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (size_t j = 0; j < i; ++j)
        if (!used[j] && arrows_dependent(arr[j], arr[i])) {
          available = false;
          break;
        }
      if (!available) continue;
      if (best == m || arrow_key(arr[i]) < arrow_key(arr[best])) best = i;
    }
    used[best] = true;
    out.push_back(arr[best]);
  }
  return CanonicalGauss{g.n, std::move(out), g.perm};
}

CanonicalGauss canonical_form(const BraidWord &w) { return canonical_form(word_to_gauss(w)); }

bool vm_equivalent(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2) {
  if (g1.n != g2.n)
    throw StrandCountMismatch("cannot compare diagrams on different strand counts");
  return canonical_form(g1) == canonical_form(g2);
}

bool vm_equivalent(const BraidWord &w1, const BraidWord &w2) {
  if (w1.n != w2.n)
    throw StrandCountMismatch("cannot compare words on different strand counts");
  return canonical_form(w1) == canonical_form(w2);
}

BraidGaussDiagram compose(const BraidGaussDiagram &g1, const BraidGaussDiagram &g2) {
  if (g1.n != g2.n)
    throw StrandCountMismatch("cannot compose diagrams on different strand counts");
  // Strand k runs through the second factor under the name g1.perm(k), so
  // second-factor arrows relabel through the inverse.
  Permutation entry = inverse(g1.perm);
  BraidGaussDiagram out{g1.n, g1.arrows, compose(g2.perm, g1.perm)};
  out.arrows.reserve(g1.arrows.size() + g2.arrows.size());
  for (const Arrow &a : g2.arrows)
    out.arrows.push_back(Arrow{entry.of(a.from), entry.of(a.to), a.sign});
  return out;
}

BraidGaussDiagram inverse(const BraidGaussDiagram &g) {
  BraidGaussDiagram out{g.n, {}, inverse(g.perm)};
  out.arrows.reserve(g.arrows.size());
  for (auto it = g.arrows.rbegin(); it != g.arrows.rend(); ++it)
    out.arrows.push_back(Arrow{g.perm.of(it->from), g.perm.of(it->to), -it->sign});
  return out;
}

std::string gauss_to_text(const BraidGaussDiagram &g) {
  std::string s = "n=" + std::to_string(g.n) + "; perm=";
  for (int k = 1; k <= g.n; ++k) {
    if (k > 1) s += ',';
    s += std::to_string(g.perm.of(k));
  }
  s += "; arrows=";
  for (const Arrow &a : g.arrows) {
    s += '(';
    s += std::to_string(a.from);
    s += '>';
    s += std::to_string(a.to);
    s += ':';
    s += a.sign > 0 ? '+' : '-';
    s += ')';
  }
  return s;
}

namespace {

struct Cursor {
  const std::string &s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(const char *lit) {
    skip_ws();
    size_t len = std::char_traits<char>::length(lit);
    if (s.compare(i, len, lit) != 0)
      throw ParseError(ParseCode::Malformed,
                       std::string("expected '") + lit + "' at offset " + std::to_string(i));
    i += len;
  }
  int read_int() {
    skip_ws();
    size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (1 << 20))
        throw ParseError(ParseCode::IndexOutOfRange, "integer too large at offset " + std::to_string(start));
      ++i;
    }
    if (i == start)
      throw ParseError(ParseCode::Malformed, "expected integer at offset " + std::to_string(i));
    return static_cast<int>(v);
  }
};

}  // namespace

BraidGaussDiagram gauss_from_text(const std::string &text) {
  Cursor c{text};
  c.expect("n=");
  int n = c.read_int();
  c.expect(";");
  c.expect("perm=");
  std::vector<int> im;
  im.push_back(c.read_int());
  for (;;) {
    c.skip_ws();
    if (!c.eat(',')) break;
    im.push_back(c.read_int());
  }
  c.expect(";");
  c.expect("arrows=");
  std::vector<Arrow> arrows;
  for (;;) {
    c.skip_ws();
    if (!c.eat('(')) break;
    Arrow a;
    a.from = c.read_int();
    c.expect(">");
    a.to = c.read_int();
    c.expect(":");
    c.skip_ws();
    if (c.eat('+'))
      a.sign = 1;
    else if (c.eat('-'))
      a.sign = -1;
    else
      throw ParseError(ParseCode::Malformed, "expected sign at offset " + std::to_string(c.i));
    c.expect(")");
    arrows.push_back(a);
  }
  c.skip_ws();
  if (c.i != text.size())
    throw ParseError(ParseCode::Malformed, "trailing characters at offset " + std::to_string(c.i));
  BraidGaussDiagram g{n, std::move(arrows), Permutation{std::move(im)}};
  check_diagram(g);
  return g;
}

std::string gauss_to_json(const BraidGaussDiagram &g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["perm"] = g.perm.images;
  auto arr = nlohmann::json::array();
  for (const Arrow &a : g.arrows)
    arr.push_back({{"from", a.from}, {"to", a.to}, {"sign", a.sign}});
  j["arrows"] = arr;
  return j.dump();
}

BraidGaussDiagram gauss_from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(ParseCode::Malformed, std::string("bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("perm") || !j.contains("arrows") ||
      !j["n"].is_number_integer() || !j["perm"].is_array() || !j["arrows"].is_array())
    throw ParseError(ParseCode::Malformed, "gauss json needs n, perm, arrows");
  BraidGaussDiagram g;
  g.n = j["n"].get<int>();
  g.perm.images = j["perm"].get<std::vector<int>>();
  for (const auto &e : j["arrows"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("sign"))
      throw ParseError(ParseCode::Malformed, "arrow needs from, to, sign");
    g.arrows.push_back(Arrow{e["from"].get<int>(), e["to"].get<int>(), e["sign"].get<int>()});
  }
  check_diagram(g);
  return g;
}

}  // namespace vbraid
