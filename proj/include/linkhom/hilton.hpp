#pragma once

// Homotopy groups of a wedge of spheres through the Hilton-Milnor splitting
//   Ω(S^{d_1} v ... v S^{d_k}) ≃ ∏_w Ω S^{1 + Σ_{t in w} (d_t - 1)}
// where w runs over a basis of basic products (Lyndon words) of the free Lie
// algebra on one letter per wedge summand.

#include <span>
#include <vector>

#include "linkhom/groups.hpp"

namespace linkhom::hilton {

/// Lyndon words over {0, ..., alphabet-1} of length <= max_length, ordered by
/// length and then lexicographically (Duval's generation algorithm).
std::vector<std::vector<int>> lyndon_words(int alphabet, int max_length);

struct Term {
  std::vector<int> word;  // letters index into dims
  int sphere_dim = 0;
  groups::GroupDescription group;
};

/// Basic products whose sphere has dimension <= n; larger spheres contribute 0.
std::vector<Term> hilton_terms(int n, std::span<const int> dims, const groups::HomotopyTable& table);

/// Direct sum of the evaluated terms (table misses stay as π_n(S^m)).
groups::GroupDescription hilton_pi(int n, std::span<const int> dims, const groups::HomotopyTable& table);

/// Evaluates π_n(S^m) and π_n(wedge) nodes through the table and hilton_pi.
/// Returns nothing when a symbolic factor or a table miss remains.
std::optional<groups::GroupDescription> evaluate(const groups::GroupDescription& g, const groups::HomotopyTable& table);

}  // namespace linkhom::hilton
