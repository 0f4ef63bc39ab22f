#pragma once

// Magnus expansion x_i -> 1 + X_i into truncated noncommutative power series
// with exact integer coefficients. A word w lies in the c-th lower central
// subgroup of a free group exactly when every term of positive degree < c
// vanishes; the reduced expansion (monomials with a repeated index deleted)
// detects nontriviality in Milnor's link group.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkhom/word.hpp"

namespace linkhom::magnus {

using Integer = boost::multiprecision::cpp_int;

/// X_{i1} X_{i2} ... X_{ik}; the empty monomial is the constant 1.
using Monomial = std::vector<GenIndex>;

/// Degree first, then lexicographic on the index sequence.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

bool has_repeated_index(std::span<const GenIndex> m);

class MagnusSeries {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  explicit MagnusSeries(int truncation);

  static MagnusSeries one(int truncation);
  /// (1 + X_i)^e truncated, via generalized binomial coefficients.
  static MagnusSeries generator_power(GenIndex i, Exponent e, int truncation);

  int truncation() const noexcept { return truncation_; }
  const Terms& terms() const noexcept { return terms_; }
  Integer coefficient(const Monomial& m) const;
  bool is_one() const;

  /// Adds c to the coefficient of m; drops m if it exceeds the truncation.
  void add(const Monomial& m, const Integer& c);

  /// Copy without monomials that repeat an index.
  MagnusSeries without_repeated_indices() const;

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int truncation_;
  Terms terms_;
};

/// Truncated product at the smaller of the two truncations.
MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b);

/// "1 + X1X2 - X2X1", "1 + 2*X1", ...
std::string to_string(const MagnusSeries& s);

/// Series with no repeated-index monomials, multiplied in the quotient ring.
class ReducedSeries {
 public:
  explicit ReducedSeries(MagnusSeries s);  // filters
  static ReducedSeries one(int truncation) { return ReducedSeries(MagnusSeries::one(truncation)); }

  const MagnusSeries& series() const noexcept { return series_; }
  Integer coefficient(const Monomial& m) const { return series_.coefficient(m); }
  bool is_one() const { return series_.is_one(); }

  friend bool operator==(const ReducedSeries&, const ReducedSeries&) = default;

 private:
  MagnusSeries series_;
};

ReducedSeries multiply(const ReducedSeries& a, const ReducedSeries& b);

MagnusSeries magnus_expand(const Word& w, int truncation);
ReducedSeries reduced_expand(const Word& w, int truncation);

/// Lowest positive degree carrying a nonzero coefficient, or nothing when all
/// terms up to the truncation vanish (then w ∈ γ_{truncation+1}).
struct GammaBound {
  std::optional<int> degree;
  int truncation = 0;

  /// "2" or ">= 4"
  std::string to_string() const;
};

GammaBound gamma_class_lower_bound(const Word& w, int max_degree);

/// Coefficient of X_{i1}...X_{im} in the reduced expansion at truncation m.
/// Throws PreconditionError on a repeated index.
Integer mu_coefficient(const Word& w, std::span<const GenIndex> indices);

/// Mechanical check that the tower cycle in F̂_n (n = 4, 5) is invisible to
/// Milnor-type invariants: it is a cycle, it lies in γ_n, and its reduced
/// expansion vanishes through degree n-1.
struct CheckLine {
  std::string subject;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct InvisibilityReport {
  int n = 0;
  std::vector<CheckLine> lines;
  bool all_passed() const;
};

/// With include_printed, the printed literature variant of the same degree
/// is checked as well.
InvisibilityReport check_milnor_invisibility(int n, bool include_printed);

}  // namespace linkhom::magnus
