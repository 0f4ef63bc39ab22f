#pragma once

// Symbolic descriptions of the abelian groups produced by the classifier,
// plus the table of homotopy groups of spheres used to evaluate them.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace linkhom::groups {

class GroupDescription;

struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};

/// Z when order is empty, Z/order otherwise.
struct Cyclic {
  std::optional<std::uint64_t> order;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

/// Z^rank; an empty rank means countably infinite rank.
struct FreeAbelian {
  std::optional<std::uint64_t> rank;
  friend bool operator==(const FreeAbelian&, const FreeAbelian&) = default;
};

/// π_n(S^m), unevaluated.
struct PiOfSphere {
  int n = 0;
  int m = 0;
  friend bool operator==(const PiOfSphere&, const PiOfSphere&) = default;
};

/// Wedge of spheres, optionally wedged with an aspherical space named by
/// `aspherical_factor` (e.g. "K(G(d_{1,2}L),1)").
struct SphereWedge {
  std::vector<int> dims;
  std::string aspherical_factor;

  bool is_point() const { return dims.empty() && aspherical_factor.empty(); }
  friend bool operator==(const SphereWedge&, const SphereWedge&) = default;
};

std::string to_string(const SphereWedge& w);

struct PiOfWedge {
  int n = 0;
  SphereWedge wedge;
  friend bool operator==(const PiOfWedge&, const PiOfWedge&) = default;
};

struct DirectSum {
  std::vector<GroupDescription> terms;
  friend bool operator==(const DirectSum&, const DirectSum&);
};

/// A factor that stays symbolic (link groups, conjugacy-class sets, ...).
struct Symbolic {
  std::string text;
  friend bool operator==(const Symbolic&, const Symbolic&) = default;
};

class GroupDescription {
 public:
  using Node = std::variant<Trivial, Cyclic, FreeAbelian, PiOfSphere, PiOfWedge, DirectSum, Symbolic>;

  GroupDescription() : node_(Trivial{}) {}
  template <class T>
    requires std::is_constructible_v<Node, T&&>
  GroupDescription(T&& node) : node_(std::forward<T>(node)) {}  // NOLINT(google-explicit-constructor)

  const Node& node() const noexcept { return node_; }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(node_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node_);
  }

  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;

 private:
  Node node_;
};

inline bool operator==(const DirectSum& a, const DirectSum& b) { return a.terms == b.terms; }

inline GroupDescription integers() { return Cyclic{}; }
inline GroupDescription cyclic(std::uint64_t k) { return k == 1 ? GroupDescription(Trivial{}) : Cyclic{k}; }

/// "0", "Z", "Z/12", "Z^3", "Z^(countable)", "pi_4(S^3)", sums joined with " + ".
/// With mark_unknown, unevaluated π_n(S^m) terms get a " [unknown]" suffix.
std::string render(const GroupDescription& g, bool mark_unknown = false);

/// Parses "0", "Z", "Z/k", "Z^k", "Z^(countable)" and sums of these with '+'.
GroupDescription parse_group(const std::string& text);

/// Concrete means built only from Trivial, Cyclic, FreeAbelian and sums.
bool is_concrete(const GroupDescription& g);

/// Atomic summands (Z, Z/k, Z^(countable), or symbolic leftovers) in a
/// canonical order, with trivial terms dropped and finite free ranks split
/// into copies of Z. Two concrete descriptions are isomorphic iff these agree.
std::vector<GroupDescription> summands(const GroupDescription& g);
bool isomorphic(const GroupDescription& a, const GroupDescription& b);

class HomotopyTable {
 public:
  struct Entry {
    GroupDescription group;
    std::string provenance;
    bool builtin = false;
  };

  /// Built-in values only: π_n(S^m) = 0 for n < m, Z for n = m, plus a
  /// handful of low-dimensional entries.
  HomotopyTable();

  /// Lines "<n> <m> <group> | <provenance>"; '#' comments. Later entries
  /// may not contradict built-in ones. Throws FormatError.
  void load(std::istream& in);
  void load_file(const std::string& path);
  void add(int n, int m, GroupDescription g, std::string provenance);

  std::optional<Entry> lookup(int n, int m) const;

 private:
  std::map<std::pair<int, int>, Entry> entries_;
};

/// The evaluated group, or PiOfSphere{n, m} itself when the table has no entry.
GroupDescription homotopy_table_lookup(const HomotopyTable& table, int n, int m);

}  // namespace linkhom::groups
