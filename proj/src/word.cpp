#include "vbraid/word.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace vbraid {

GeneratorLetter sigma(int index, int exponent) {
  return GeneratorLetter{GenKind::Sigma, index, exponent};
}

GeneratorLetter tau(int index) { return GeneratorLetter{GenKind::Tau, index, 1}; }

static void check_letter(const GeneratorLetter &l, int n) {
  if (l.index < 1 || l.index >= n)
    throw ParseError(ParseCode::IndexOutOfRange,
                     "generator index " + std::to_string(l.index) +
                         " out of range for n=" + std::to_string(n));
  if (l.exponent != 1 && l.exponent != -1)
    throw ParseError(ParseCode::Malformed, "exponent must be +1 or -1");
  if (l.kind == GenKind::Tau && l.exponent != 1)
    throw ParseError(ParseCode::Malformed, "tau letters carry exponent +1");
}

BraidWord make_word(int n, std::vector<GeneratorLetter> letters) {
  if (n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  for (const auto &l : letters) check_letter(l, n);
  return BraidWord{n, std::move(letters)};
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) im[static_cast<size_t>(k) - 1] = k;
  return Permutation{std::move(im)};
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if (of(k) != k) return false;
  return true;
}

Permutation compose(const Permutation &after, const Permutation &before) {
  if (after.size() != before.size())
    throw StrandCountMismatch("permutation sizes differ");
  std::vector<int> im(static_cast<size_t>(after.size()));
  for (int k = 1; k <= after.size(); ++k)
    im[static_cast<size_t>(k) - 1] = after.of(before.of(k));
  return Permutation{std::move(im)};
}

Permutation inverse(const Permutation &p) {
  std::vector<int> im(static_cast<size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) im[static_cast<size_t>(p.of(k)) - 1] = k;
  return Permutation{std::move(im)};
}

BraidWord parse_word(const std::string &text, int n) {
  if (n < 1) throw ParseError(ParseCode::Malformed, "strand count must be >= 1");
  std::vector<GeneratorLetter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    char c = tok[0];
    if (c != 's' && c != 't')
      throw ParseError(ParseCode::UnknownToken, "unknown token '" + tok + "'");
    size_t i = 1;
    long idx = 0;
    size_t digits = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      idx = idx * 10 + (tok[i] - '0');
      if (idx > (1 << 20))
        throw ParseError(ParseCode::IndexOutOfRange, "index too large in '" + tok + "'");
      ++i;
      ++digits;
    }
    if (digits == 0)
      throw ParseError(ParseCode::EmptyIndex, "token '" + tok + "' is missing its index");
    int exponent = 1;
    if (i < tok.size() && tok[i] == '\'') {
      exponent = -1;
      ++i;
    }
    if (i != tok.size())
      throw ParseError(ParseCode::Malformed, "trailing characters in '" + tok + "'");
    if (idx < 1 || idx >= n)
      throw ParseError(ParseCode::IndexOutOfRange,
                       "token '" + tok + "' out of range for n=" + std::to_string(n));
    if (c == 't') exponent = 1;  // t_i is its own inverse
    letters.push_back(GeneratorLetter{c == 's' ? GenKind::Sigma : GenKind::Tau,
                                      static_cast<int>(idx), exponent});
  }
  return BraidWord{n, std::move(letters)};
}

std::string word_to_text(const BraidWord &w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const auto &l = w.letters[i];
    if (i) out += ' ';
    out += l.kind == GenKind::Sigma ? 's' : 't';
    out += std::to_string(l.index);
    if (l.exponent == -1) out += '\'';
  }
  return out;
}

std::string word_to_json(const BraidWord &w) {
  nlohmann::json j;
  j["n"] = w.n;
  auto arr = nlohmann::json::array();
  for (const auto &l : w.letters)
    arr.push_back({{"kind", l.kind == GenKind::Sigma ? "s" : "t"},
                   {"index", l.index},
                   {"exp", l.exponent}});
  j["letters"] = arr;
  return j.dump();
}

BraidWord word_from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(ParseCode::Malformed, std::string("bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("letters") ||
      !j["n"].is_number_integer() || !j["letters"].is_array())
    throw ParseError(ParseCode::Malformed, "word json needs integer n and letters array");
  int n = j["n"].get<int>();
  std::vector<GeneratorLetter> letters;
  for (const auto &e : j["letters"]) {
    if (!e.is_object() || !e.contains("kind") || !e.contains("index") || !e.contains("exp"))
      throw ParseError(ParseCode::Malformed, "letter needs kind, index, exp");
    std::string kind = e["kind"].get<std::string>();
    if (kind != "s" && kind != "t")
      throw ParseError(ParseCode::Malformed, "letter kind must be \"s\" or \"t\"");
    letters.push_back(GeneratorLetter{kind == "s" ? GenKind::Sigma : GenKind::Tau,
                                      e["index"].get<int>(), e["exp"].get<int>()});
  }
  return make_word(n, std::move(letters));
}

BraidWord concat(const BraidWord &w1, const BraidWord &w2) {
  if (w1.n != w2.n)
    throw StrandCountMismatch("cannot concatenate words on " + std::to_string(w1.n) +
                              " and " + std::to_string(w2.n) + " strands");
  BraidWord out = w1;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

BraidWord invert(const BraidWord &w) {
  BraidWord out{w.n, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    GeneratorLetter l = *it;
    if (l.kind == GenKind::Sigma) l.exponent = -l.exponent;
    out.letters.push_back(l);
  }
  return out;
}

Permutation permutation(const BraidWord &w) {
  std::vector<int> strand_at(static_cast<size_t>(w.n) + 1);
  for (int p = 1; p <= w.n; ++p) strand_at[static_cast<size_t>(p)] = p;
  for (const auto &l : w.letters)
    std::swap(strand_at[static_cast<size_t>(l.index)],
              strand_at[static_cast<size_t>(l.index) + 1]);
  std::vector<int> im(static_cast<size_t>(w.n));
  for (int p = 1; p <= w.n; ++p) im[static_cast<size_t>(strand_at[static_cast<size_t>(p)]) - 1] = p;
  return Permutation{std::move(im)};
}

}  // namespace vbraid
