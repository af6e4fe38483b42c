#pragma once

#include <string>
#include <vector>

#include "vbraid/errors.hpp"

namespace vbraid {

enum class GenKind { Sigma, Tau };

// One letter of a braid word on n strands. Sigma letters carry an exponent;
// tau letters are involutions and always store exponent +1 (a parsed "t2'"
// normalizes to "t2").
struct GeneratorLetter {
  GenKind kind = GenKind::Sigma;
  int index = 1;     // 1-based, valid range [1, n-1]
  int exponent = 1;  // +1 or -1

  friend bool operator==(const GeneratorLetter &, const GeneratorLetter &) = default;
};

GeneratorLetter sigma(int index, int exponent = 1);
GeneratorLetter tau(int index);

struct BraidWord {
  int n = 1;
  std::vector<GeneratorLetter> letters;

  friend bool operator==(const BraidWord &, const BraidWord &) = default;
};

// Validates indices and exponents against n. Throws ParseError.
BraidWord make_word(int n, std::vector<GeneratorLetter> letters);

// Permutation of {1..n}, 1-based: images[k-1] = image of k.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int of(int k) const { return images[static_cast<size_t>(k) - 1]; }
  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
};

// compose(a, b)(k) = a(b(k)); words concatenated left to right compose as
// permutation(w1 w2) = compose(permutation(w2), permutation(w1)).
Permutation compose(const Permutation &after, const Permutation &before);
Permutation inverse(const Permutation &p);

// Text format: whitespace separated tokens. "s3" is the positive crossing of
// strands at positions 3,4; "s3'" its inverse; "t2" the virtual crossing at
// positions 2,3. Empty input is the identity word.
BraidWord parse_word(const std::string &text, int n);
std::string word_to_text(const BraidWord &w);

std::string word_to_json(const BraidWord &w);
BraidWord word_from_json(const std::string &text);

BraidWord concat(const BraidWord &w1, const BraidWord &w2);  // StrandCountMismatch
BraidWord invert(const BraidWord &w);

// Endpoint permutation: strand k ends at position permutation(w).of(k).
// Every letter, sigma or tau alike, swaps the strands sitting at positions
// (index, index+1).
Permutation permutation(const BraidWord &w);

}  // namespace vbraid
