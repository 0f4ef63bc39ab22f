#pragma once

// Free-group words over the generators x1, x2, ... stored as run-length
// syllables and kept freely reduced at all times.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace linkhom {

using GenIndex = std::uint32_t;
using Exponent = std::int64_t;

/// One syllable x_gen^exp with exp != 0.
struct Letter {
  GenIndex gen = 1;
  Exponent exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Adjacent syllables always carry different
/// generators, so equality of group elements is structural equality.
class Word {
 public:
  Word() = default;

  /// Reduces `raw` (cancels and merges) to canonical form.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }
  static Word generator(GenIndex i, Exponent e = 1);

  const std::vector<Letter>& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }
  /// Sum of |exp| over syllables.
  std::uint64_t length() const;
  /// Largest generator index occurring, 0 for the identity.
  GenIndex max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> syllables_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
/// w^k; negative k gives powers of the inverse.
Word power(const Word& w, Exponent k);
/// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);
/// g w g^-1.
Word conjugate(const Word& w, const Word& g);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// Substitution homomorphism; generators without an entry map to themselves.
class GeneratorMap {
 public:
  GeneratorMap() = default;
  GeneratorMap& set(GenIndex i, Word image);
  const Word* image_of(GenIndex i) const;

  /// Map sending x_i to 1 and fixing every other generator.
  static GeneratorMap killing(GenIndex i);

 private:
  std::map<GenIndex, Word> images_;
};

Word apply_map(const GeneratorMap& m, const Word& w);

/// Decides w ∈ <<x_i>> by killing x_i and testing for the identity.
bool in_normal_closure(const Word& w, GenIndex i);

/// Checked exponent arithmetic; throws std::overflow_error on wraparound.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

}  // namespace linkhom
