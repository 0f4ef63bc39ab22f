#include "linkhom/hilton.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"

namespace linkhom::hilton {

using groups::GroupDescription;

std::vector<std::vector<int>> lyndon_words(int alphabet, int max_length) {
  std::vector<std::vector<int>> out;
  if (alphabet < 1 || max_length < 1) return out;
  std::vector<int> w{0};
  while (!w.empty()) {
    out.push_back(w);
    // Duval: extend periodically to max_length, then increment the last
    // letter that is not maximal.
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Term> hilton_terms(int n, std::span<const int> dims, const groups::HomotopyTable& table) {
  if (n < 2) throw PreconditionError("homotopy degree must be >= 2");
  for (int d : dims) {
    if (d < 2) throw PreconditionError("wedge summands must be spheres of dimension >= 2");
  }
  std::vector<Term> terms;
  if (dims.empty()) return terms;
  // Every letter adds at least 1 to the sphere dimension, so words longer
  // than n - 1 land above degree n.
  for (auto& w : lyndon_words(static_cast<int>(dims.size()), n - 1)) {
    int dim = 1;
    for (int letter : w) dim += dims[letter] - 1;
    if (dim > n) continue;
    GroupDescription g = groups::homotopy_table_lookup(table, n, dim);
    terms.push_back({std::move(w), dim, std::move(g)});
  }
  return terms;
}

GroupDescription hilton_pi(int n, std::span<const int> dims, const groups::HomotopyTable& table) {
  std::vector<GroupDescription> parts;
  for (auto& t : hilton_terms(n, dims, table)) {
    if (!t.group.is<groups::Trivial>()) parts.push_back(std::move(t.group));
  }
  if (parts.empty()) return groups::Trivial{};
  if (parts.size() == 1) return parts[0];
  return groups::DirectSum{std::move(parts)};
}

std::optional<GroupDescription> evaluate(const GroupDescription& g, const groups::HomotopyTable& table) {
  using namespace groups;
  std::optional<GroupDescription> result = std::visit(
      [&](const auto& node) -> std::optional<GroupDescription> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PiOfSphere>) {
          return homotopy_table_lookup(table, node.n, node.m);
        } else if constexpr (std::is_same_v<T, PiOfWedge>) {
          if (!node.wedge.aspherical_factor.empty()) return std::nullopt;
          return hilton_pi(node.n, node.wedge.dims, table);
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          std::vector<GroupDescription> parts;
          for (const auto& t : node.terms) {
            auto e = evaluate(t, table);
            if (!e) return std::nullopt;
            if (!e->template is<Trivial>()) parts.push_back(*e);
          }
          if (parts.empty()) return Trivial{};
          if (parts.size() == 1) return parts[0];
          return DirectSum{std::move(parts)};
        } else if constexpr (std::is_same_v<T, Symbolic>) {
          return std::nullopt;
        } else {
          return GroupDescription(node);
        }
      },
      g.node());
  if (result && !is_concrete(*result)) return std::nullopt;
  return result;
}

}  // namespace linkhom::hilton
