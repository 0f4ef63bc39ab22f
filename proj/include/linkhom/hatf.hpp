#pragma once

// The simplicial group F̂ (a model for ΩS²). In simplicial degree n the group
// is F̂_{n+1} = <x1, ..., x_{n+1} | x1 x2 ... x_{n+1} = 1>, which is free on
// x1..xn; elements are stored with x_{n+1} eliminated.
//
// Faces and degeneracies act on generators by
//   d_i x_j = x_j (j < i+1),  1         (j = i+1),  x_{j-1} (j > i+1)
//   s_i x_j = x_j (j < i+1),  x_j x_{j+1} (j = i+1),  x_{j+1} (j > i+1)

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "linkhom/word.hpp"

namespace linkhom::hatf {

class HatFElement {
 public:
  HatFElement() = default;

  /// Accepts words over x1..x_{degree+1}; x_{degree+1} is rewritten as
  /// (x1...x_degree)^-1. Larger generator indices are rejected.
  HatFElement(int degree, const Word& w);

  static HatFElement identity(int degree) { return HatFElement(degree, Word{}); }

  int degree() const noexcept { return degree_; }
  const Word& word() const noexcept { return word_; }
  bool is_identity() const noexcept { return word_.is_identity(); }

  friend bool operator==(const HatFElement&, const HatFElement&) = default;

 private:
  int degree_ = 0;
  Word word_;
};

HatFElement operator*(const HatFElement& a, const HatFElement& b);
HatFElement inverse(const HatFElement& a);
HatFElement commutator(const HatFElement& a, const HatFElement& b);

HatFElement face(int i, const HatFElement& e);
HatFElement degeneracy(int i, const HatFElement& e);

/// In the kernel of d_1..d_n.
bool is_moore_chain(const HatFElement& e);
/// In the kernel of every face d_0..d_n.
bool is_cycle(const HatFElement& e);
/// Same predicate computed as membership in <<x_1>> ∩ ... ∩ <<x_{n+1}>>
/// through word-level normal closures; <<x_{n+1}>> is tested after a change
/// of free basis that eliminates x1 instead.
bool is_cycle_by_normal_closures(const HatFElement& e);

/// z -> [s_0 z, s_1 z]. Throws PreconditionError unless z is a cycle of degree >= 1.
HatFElement eta_word(const HatFElement& z);

/// Iterated eta starting from x1 in degree 1; eta_tower(k) has degree k.
HatFElement eta_tower(int k);

/// Nested-bracket expression whose leaves are words. Faces and degeneracies
/// are homomorphisms, so they act leafwise.
class BracketExpr {
 public:
  explicit BracketExpr(Word leaf);
  BracketExpr(BracketExpr left, BracketExpr right);

  bool is_leaf() const noexcept { return std::holds_alternative<Word>(node_); }
  Word evaluate() const;
  BracketExpr map_leaves(const GeneratorMap& m) const;
  /// e.g. "[[x1*x2*x3, x1*x2], [x1*x2*x3, x1]]"
  std::string to_string(char letter = 'x') const;

 private:
  struct Pair {
    std::shared_ptr<const BracketExpr> left;
    std::shared_ptr<const BracketExpr> right;
  };
  std::variant<Word, Pair> node_;
};

/// Bracket form of eta_tower(k), built by applying the degeneracies leafwise.
BracketExpr eta_tower_expression(int k);

/// Printed forms of the degree-3 and degree-4 generators as they appear in
/// the literature, kept for comparison against the mechanical tower. The
/// degree-4 one had an unbalanced bracket in print; this is the balanced
/// reading.
inline constexpr std::string_view kPrintedEtaWord = "[[x1*x2*x3, x2], [x1*x2*x3, x1]]";
inline constexpr std::string_view kPrintedEtaSquaredWord =
    "[[[x1*x2*x3*x4, x3], [x1*x2*x3*x4, x2]], [[x1*x2*x3*x4, x2*x3], [x1*x2*x3*x4, x1]]]";

HatFElement printed_eta_word();          // degree 3
HatFElement printed_eta_squared_word();  // degree 4

/// Deterministic element [[g_σ0, g_σ1], ..., g_σn] of the symmetric commutator
/// of the face kernels, where g_i is a conjugate of a power of x_{i+1}.
/// Seed 0 gives the plain [[x1, x2], ..., x_{n+1}].
HatFElement symmetric_commutator_sample(int degree, std::uint64_t seed);

/// Tower word of degree k-1 read in the meridians a1..ak of the k-component
/// Hopf link.
struct MeridianWord {
  int link_size = 0;
  Word word;
  std::string bracket_form;  // uses 'a' letters
};

MeridianWord meridian_word(int k);

/// "degree=<n>; word=<syllable form>"
std::string to_string(const HatFElement& e);
HatFElement parse_element(std::string_view text);

}  // namespace linkhom::hatf
