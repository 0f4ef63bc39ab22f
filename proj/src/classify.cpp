#include "linkhom/classify.hpp"

#include <cstdlib>

#include "linkhom/errors.hpp"
#include "linkhom/hilton.hpp"

namespace linkhom::links {

namespace {

using groups::GroupDescription;

void check_label(const LinkProfile& p, int i) {
  if (i < 1 || i > p.components()) {
    throw PreconditionError("component " + std::to_string(i) + " out of range 1.." + std::to_string(p.components()));
  }
}

void check_distinct(const LinkProfile& p, std::initializer_list<int> labels) {
  Sublink seen = 0;
  for (int i : labels) {
    check_label(p, i);
    if (seen & component(i)) throw PreconditionError("component labels must be distinct");
    seen |= component(i);
  }
}

// chi2 of the sublink `ambient` (viewed as a link) at components i, j in it.
int chi2_within(const LinkProfile& p, Sublink ambient, int i, int j) {
  const Sublink a = ambient;
  const Sublink ci = component(i);
  const Sublink cj = component(j);
  return p.nu(a & ~(ci | cj)) - p.nu(a & ~ci) - p.nu(a & ~cj) + p.nu(a);
}

groups::SphereWedge wedge_for(int chi, Sublink deleted, Sublink remaining) {
  groups::SphereWedge w;
  if (remaining != 0) {
    std::string label = to_string(deleted);
    label = label.substr(1, label.size() - 2);
    w.aspherical_factor = "K(G(d_{" + label + "}L),1)";
  }
  const int count = std::abs(chi);
  const int dim = 2 + (count - chi) / 2;
  w.dims.assign(static_cast<std::size_t>(count), dim);
  return w;
}

std::string label_list(Sublink s) {
  std::string t = to_string(s);
  return t.substr(1, t.size() - 2);
}

}  // namespace

int chi2(const LinkProfile& p, int i, int j) {
  check_distinct(p, {i, j});
  return chi2_within(p, p.full(), i, j);
}

int chi3(const LinkProfile& p, int i, int j, int k) {
  check_distinct(p, {i, j, k});
  const Sublink ci = component(i);
  const Sublink cj = component(j);
  const Sublink ck = component(k);
  return p.nu_deleting(ci | cj | ck) - p.nu_deleting(ci | cj) - p.nu_deleting(ci | ck) - p.nu_deleting(cj | ck) +
         p.nu_deleting(ci) + p.nu_deleting(cj) + p.nu_deleting(ck) - p.nu_deleting(0);
}

int chi3_by_deletion(const LinkProfile& p, int i, int j, int k) {
  check_distinct(p, {i, j, k});
  const LinkProfile smaller = delete_component(p, k);
  auto relabel = [k](int x) { return x > k ? x - 1 : x; };
  return chi2(smaller, relabel(i), relabel(j)) - chi2(p, i, j);
}

LinkProfile delete_component(const LinkProfile& p, int k) {
  check_label(p, k);
  const int n = p.components();
  if (n < 2) throw PreconditionError("cannot delete the only component");
  const Sublink low = component(k) - 1;
  std::vector<int> nu(std::size_t{1} << (n - 1));
  for (Sublink s = 0; s < nu.size(); ++s) {
    const Sublink lifted = (s & low) | ((s & ~low) << 1);
    nu[s] = p.nu(lifted);
  }
  return LinkProfile(n - 1, std::move(nu));
}

bool strongly_nonsplittable(const LinkProfile& p, Sublink L0) {
  if ((L0 & ~p.full()) != 0) throw PreconditionError("L0 is not a sublink");
  for (Sublink t = 1; t <= p.full(); ++t) {
    if ((t & L0) == L0 && t != L0 && p.nu(t) != 0) return false;
  }
  return true;
}

groups::SphereWedge classify_X2(const LinkProfile& p, int i, int j) {
  // chi < -1 does occur (Borromean pairs give -2); the wedge formula is applied as is
  const int chi = chi2(p, i, j);
  const Sublink deleted = component(i) | component(j);
  return wedge_for(chi, deleted, p.full() & ~deleted);
}

groups::SphereWedge classify_X3(const LinkProfile& p, int i, int j, int k) {
  const int chi = chi3(p, i, j, k);
  const Sublink deleted = component(i) | component(j) | component(k);
  if (chi < -1) {
    throw UnrealizableProfile("chi" + to_string(deleted) + " = " + std::to_string(chi) +
                              " < -1 cannot occur for a link");
  }
  return wedge_for(chi, deleted, p.full() & ~deleted);
}

Classification classify_A(const LinkProfile& p, Sublink L0, Sublink Lp, const groups::HomotopyTable& table) {
  const Sublink full = p.full();
  if ((L0 & ~full) != 0 || (Lp & ~full) != 0) throw PreconditionError("sublink out of range");
  if ((L0 & Lp) != 0) throw PreconditionError("L0 and the sublink must be disjoint");
  if (size_of(Lp) < 2) throw PreconditionError("the sublink needs at least two components");

  const int n = p.components();
  const int t = size_of(Lp);
  const Sublink rest = full & ~L0;
  Classification c;

  auto trivial = [&](std::string rule) {
    c.group = groups::Trivial{};
    c.value = groups::Trivial{};
    c.rule = std::move(rule);
    return c;
  };

  const bool strong = size_of(rest) >= 2 && (Lp & ~rest) == 0 && strongly_nonsplittable(p, L0);
  if (strong) {
    if (Lp != rest) return trivial("strongly nonsplittable pair, proper sublink of L \\ L0");
    if (L0 == 0) {
      c.group = groups::PiOfSphere{t, 3};
      c.value = hilton::evaluate(c.group, table);
      c.rule = "strongly nonsplittable link, full sublink: A = pi_n(S^3)";
      if (!c.value) c.notes.push_back("pi_" + std::to_string(t) + "(S^3) is not in the homotopy table");
      return c;
    }
    const int genus = p.nu(L0);
    if (genus == 0) return trivial("strongly nonsplittable pair with nonsplittable L0");

    const groups::PiOfWedge spheres{t, groups::SphereWedge{std::vector<int>(static_cast<std::size_t>(genus), 2), {}}};
    const std::string g0 = "G(L0)";
    groups::Symbolic twisted{"pi_" + std::to_string(t) + "(v_{m>=1} v^{" + std::to_string(genus) + "^m} " + g0 +
                             " ^ S^{m+1})"};
    c.group = groups::DirectSum{{spheres, twisted}};
    c.rule = "strongly nonsplittable pair, L0 splittable with genus " + std::to_string(genus);
    if (t == 2) {
      // G(L0) ^ S^2 is a wedge of countably many 2-spheres
      c.value = groups::FreeAbelian{};
    }
    if (auto v = hilton::evaluate(spheres, table)) {
      c.notes.push_back(groups::render(spheres) + " = " + groups::render(*v, true));
    }
    c.notes.push_back("every pi_" + std::to_string(t) + "(S^m), 2 <= m <= " + std::to_string(t) +
                      ", occurs as a summand countably infinitely often");
    c.notes.push_back("link invariants: the same expression with G(L0) replaced by its set of conjugacy classes C(L0)");
    c.notes.push_back("torsion beyond these formulas is not determined");
    return c;
  }

  // Two-component sublinks: A is π_2 of X^L_{i,j}.
  if (t == 2) {
    int i = 0;
    int j = 0;
    for (int a = 1; a <= n; ++a) {
      if (Lp & component(a)) (i == 0 ? i : j) = a;
    }
    const int chi = chi2(p, i, j);
    if (n <= 3) return trivial("two-component sublink of a link with at most 3 components");
    if (chi <= 0) return trivial("two-component criterion: chi" + to_string(Lp) + " = " + std::to_string(chi) + " <= 0");
    c.group = groups::FreeAbelian{};
    c.value = groups::FreeAbelian{};
    c.rule = "two-component criterion: chi" + to_string(Lp) + " = " + std::to_string(chi) + " > 0";
    c.notes.push_back("A = pi_2(" + groups::to_string(classify_X2(p, i, j)) +
                      "), free abelian on the G(d_{" + label_list(Lp) + "}L)-translates of each S^2");
    return c;
  }

  if (t == 3 && (L0 | Lp) == full) {
    int idx[3] = {0, 0, 0};
    int f = 0;
    for (int a = 1; a <= n; ++a) {
      if (Lp & component(a)) idx[f++] = a;
    }
    const int chi = chi3(p, idx[0], idx[1], idx[2]);
    const groups::SphereWedge w = classify_X3(p, idx[0], idx[1], idx[2]);
    if (n == 3 && chi == 1) throw UnrealizableProfile("chi{1,2,3} = 1 cannot occur for a 3-link");

    c.rule = "three-component sublink: chi" + to_string(Lp) + " = " + std::to_string(chi);
    c.bar_quotient = n > 3;
    if (n > 3) {
      c.notes.push_back("describes the quotient A-bar by [A_i n A_j, A_k]-type products; the kernel of A -> A-bar "
                        "is not determined");
    } else {
      c.notes.push_back("for 3-links every pairwise quotient vanishes, so A = A-bar");
    }
    if (chi == 0) {
      c.group = groups::Trivial{};
      c.value = groups::Trivial{};
      return c;
    }
    if (L0 == 0) {
      c.group = groups::PiOfWedge{3, groups::SphereWedge{w.dims, {}}};
      c.value = hilton::evaluate(c.group, table);
      return c;
    }
    const int dim = w.dims.front();
    c.group = groups::Symbolic{"pi_3(v^" + std::to_string(w.dims.size()) + " G(d_{" + label_list(Lp) + "}L) x| S^" +
                               std::to_string(dim) + ")"};
    c.value = groups::FreeAbelian{};
    c.notes.push_back("the link group of the nonempty link d_{" + label_list(Lp) +
                      "}L is infinite, giving countably infinite rank");
    return c;
  }

  c.classified = false;
  c.rule = "no implemented criterion applies";
  return c;
}

std::string render(const Classification& c) {
  if (!c.classified) return "not classified by implemented theorems";
  std::string prefix = c.bar_quotient ? "A-bar: " : "";
  if (c.group.is<groups::Trivial>()) return prefix + "0 (trivial)";
  const std::string sym = groups::render(c.group);
  if (c.value) {
    const std::string val = groups::render(*c.value, true);
    if (val == sym) return prefix + val;
    if (c.value->is<groups::Trivial>()) return prefix + sym + " = 0 (trivial)";
    return prefix + sym + " = " + val;
  }
  return prefix + groups::render(c.group, true);
}

std::vector<Finding> check_profile(const LinkProfile& p) {
  std::vector<Finding> out;
  const int n = p.components();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const int y = chi3(p, i, j, k);
        const std::string name = "chi" + to_string(component(i) | component(j) | component(k));
        if (y < -1) {
          out.push_back({true, name + " = " + std::to_string(y) + " < -1"});
        } else if (n == 3 && y == 1) {
          out.push_back({true, name + " = 1, which no 3-link attains"});
        }
      }
    }
  }
  return out;
}

}  // namespace linkhom::links
