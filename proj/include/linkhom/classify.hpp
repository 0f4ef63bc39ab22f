#pragma once

// Splitting-genus arithmetic on link profiles and the resulting descriptions
// of the homotopy types X^L_{i,j}, X^L_{i,j,k} and of the groups
//   A(L, L') = (∩_{l in L'} A(L, l)) / (symmetric commutator subgroup).

#include <optional>
#include <string>
#include <vector>

#include "linkhom/groups.hpp"
#include "linkhom/profile.hpp"

namespace linkhom::links {

/// ν(d_{i,j}L) - ν(d_iL) - ν(d_jL) + ν(L).
int chi2(const LinkProfile& p, int i, int j);
/// Seven-term inclusion-exclusion over the deletions of {i, j, k}.
int chi3(const LinkProfile& p, int i, int j, int k);
/// Same value computed as chi2 of d_k L minus chi2 of L.
int chi3_by_deletion(const LinkProfile& p, int i, int j, int k);

/// Restriction of the profile to the link with component k removed; the
/// remaining components are relabelled 1..n-1 in order.
LinkProfile delete_component(const LinkProfile& p, int k);

/// Every sublink strictly containing L0 is nonsplittable.
bool strongly_nonsplittable(const LinkProfile& p, Sublink L0);

/// X^L_{i,j} ≃ K(G(d_{i,j}L),1) v (|χ| spheres of dimension 2 + (|χ|-χ)/2).
/// Throws UnrealizableProfile when χ < -1.
groups::SphereWedge classify_X2(const LinkProfile& p, int i, int j);
/// Same shape with χ³. Throws UnrealizableProfile when χ³ < -1.
groups::SphereWedge classify_X3(const LinkProfile& p, int i, int j, int k);

struct Classification {
  bool classified = true;
  groups::GroupDescription group;                   // symbolic form
  std::optional<groups::GroupDescription> value;    // evaluated, when possible
  std::string rule;                                 // which criterion applied
  bool bar_quotient = false;  // only the canonical quotient of A is described
  std::vector<std::string> notes;
};

/// A(L, Lp) for a sublink Lp (|Lp| >= 2) disjoint from L0. Returns
/// classified = false when no implemented criterion covers the input.
Classification classify_A(const LinkProfile& p, Sublink L0, Sublink Lp, const groups::HomotopyTable& table);

/// Single result line: "pi_4(S^3) = Z/2", "0 (trivial)", "Z^(countable)", ...
std::string render(const Classification& c);

struct Finding {
  bool unrealizable = false;
  std::string message;
};

/// Constraints every actual link satisfies beyond the profile invariants:
/// χ ≥ -1 for all pairs and triples, and χ³ ∈ {-1, 0, 2} for 3-links.
/// Passing is not a realizability claim.
std::vector<Finding> check_profile(const LinkProfile& p);

}  // namespace linkhom::links
