#include "linkhom/groups.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom::groups {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

GroupDescription parse_atom(const std::string& t) {
  if (t == "0") return Trivial{};
  if (t == "Z") return integers();
  if (t == "Z^(countable)") return FreeAbelian{};
  if (t.rfind("Z/", 0) == 0) {
    auto k = parse_u64(std::string_view(t).substr(2));
    if (!k || *k == 0) throw std::invalid_argument("bad cyclic order in '" + t + "'");
    return cyclic(*k);
  }
  if (t.rfind("Z^", 0) == 0) {
    auto k = parse_u64(std::string_view(t).substr(2));
    if (!k) throw std::invalid_argument("bad rank in '" + t + "'");
    return *k == 0 ? GroupDescription(Trivial{}) : GroupDescription(FreeAbelian{*k});
  }
  throw std::invalid_argument("cannot read group '" + t + "'");
}

void collect(const GroupDescription& g, std::vector<GroupDescription>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial>) {
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          for (const auto& t : node.terms) collect(t, out);
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          if (!node.rank) {
            out.push_back(node);
          } else {
            for (std::uint64_t i = 0; i < *node.rank; ++i) out.push_back(integers());
          }
        } else {
          out.push_back(node);
        }
      },
      g.node());
}

}  // namespace

std::string to_string(const SphereWedge& w) {
  std::vector<std::string> parts;
  if (!w.aspherical_factor.empty()) parts.push_back(w.aspherical_factor);
  for (int d : w.dims) parts.push_back("S^" + std::to_string(d));
  if (parts.empty()) return "*";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " v " + parts[i];
  return out;
}

std::string render(const GroupDescription& g, bool mark_unknown) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return "0";
        } else if constexpr (std::is_same_v<T, Cyclic>) {
          return node.order ? "Z/" + std::to_string(*node.order) : "Z";
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          if (!node.rank) return "Z^(countable)";
          if (*node.rank == 0) return "0";
          if (*node.rank == 1) return "Z";
          return "Z^" + std::to_string(*node.rank);
        } else if constexpr (std::is_same_v<T, PiOfSphere>) {
          std::string s = "pi_" + std::to_string(node.n) + "(S^" + std::to_string(node.m) + ")";
          return mark_unknown ? s + " [unknown]" : s;
        } else if constexpr (std::is_same_v<T, PiOfWedge>) {
          return "pi_" + std::to_string(node.n) + "(" + to_string(node.wedge) + ")";
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          if (node.terms.empty()) return "0";
          std::string out;
          for (const auto& t : node.terms) {
            if (!out.empty()) out += " + ";
            out += render(t, mark_unknown);
          }
          return out;
        } else {
          return node.text;
        }
      },
      g.node());
}

GroupDescription parse_group(const std::string& text) {
  std::vector<GroupDescription> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t plus = std::min(text.find('+', pos), text.size());
    const std::string atom = trim(std::string_view(text).substr(pos, plus - pos));
    if (atom.empty()) throw std::invalid_argument("empty summand in '" + text + "'");
    terms.push_back(parse_atom(atom));
    pos = plus + 1;
  }
  if (terms.size() == 1) return terms[0];
  return DirectSum{std::move(terms)};
}

bool is_concrete(const GroupDescription& g) {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, DirectSum>) {
          return std::all_of(node.terms.begin(), node.terms.end(), [](const auto& t) { return is_concrete(t); });
        } else {
          return std::is_same_v<T, Trivial> || std::is_same_v<T, Cyclic> || std::is_same_v<T, FreeAbelian>;
        }
      },
      g.node());
}

std::vector<GroupDescription> summands(const GroupDescription& g) {
  std::vector<GroupDescription> out;
  collect(g, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return render(a) < render(b); });
  return out;
}

bool isomorphic(const GroupDescription& a, const GroupDescription& b) {
  // Summands are atomic, so comparing sorted renderings is enough; this does
  // not attempt Z/6 = Z/2 + Z/3 style rewriting.
  auto sa = summands(a);
  auto sb = summands(b);
  if (sa.size() != sb.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (render(sa[i]) != render(sb[i])) return false;
  }
  return true;
}

HomotopyTable::HomotopyTable() {
  const std::string toda = "Toda's tables";
  const std::string hopf = "Hopf fibration S^3 -> S^2 (iota, eta, eta^2)";
  entries_[{4, 3}] = {cyclic(2), toda, true};
  entries_[{5, 3}] = {cyclic(2), toda, true};
  entries_[{6, 3}] = {cyclic(12), toda, true};
  entries_[{3, 2}] = {integers(), hopf, true};
  entries_[{4, 2}] = {cyclic(2), hopf, true};
  entries_[{5, 2}] = {cyclic(2), hopf, true};
}

void HomotopyTable::add(int n, int m, GroupDescription g, std::string provenance) {
  if (n < 1 || m < 1) throw PreconditionError("homotopy indices must be >= 1");
  if (provenance.empty()) throw PreconditionError("table entries need a provenance string");
  if (auto existing = lookup(n, m); existing && existing->builtin && !isomorphic(existing->group, g)) {
    throw PreconditionError("entry for pi_" + std::to_string(n) + "(S^" + std::to_string(m) +
                            ") contradicts the built-in value " + render(existing->group));
  }
  entries_[{n, m}] = {std::move(g), std::move(provenance), false};
}

void HomotopyTable::load(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw FormatError(lineno, "expected '<n> <m> <group> | <provenance>'");
    const std::string provenance = trim(std::string_view(line).substr(bar + 1));
    if (provenance.empty()) throw FormatError(lineno, "missing provenance after '|'");
    std::istringstream ls(line.substr(0, bar));
    int n = 0;
    int m = 0;
    if (!(ls >> n >> m) || n < 1 || m < 1) throw FormatError(lineno, "expected positive integers n and m");
    std::string rest;
    std::getline(ls, rest);
    try {
      add(n, m, parse_group(trim(rest)), provenance);
    } catch (const std::invalid_argument& e) {
      throw FormatError(lineno, e.what());
    }
  }
}

void HomotopyTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table '" + path + "'");
  load(in);
}

std::optional<HomotopyTable::Entry> HomotopyTable::lookup(int n, int m) const {
  if (n < 1 || m < 1) throw PreconditionError("homotopy indices must be >= 1");
  if (n < m) return Entry{Trivial{}, "below the connectivity of S^m", true};
  if (n == m) return Entry{integers(), "degree", true};
  if (m == 1) return Entry{Trivial{}, "universal cover of S^1 is contractible", true};
  auto it = entries_.find({n, m});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

GroupDescription homotopy_table_lookup(const HomotopyTable& table, int n, int m) {
  if (auto e = table.lookup(n, m)) return e->group;
  return PiOfSphere{n, m};
}

}  // namespace linkhom::groups
