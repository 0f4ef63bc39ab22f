#include "linkhom/magnus.hpp"

#include <algorithm>
#include <set>

#include "linkhom/errors.hpp"
#include "linkhom/hatf.hpp"

namespace linkhom::magnus {

namespace {

void check_truncation(int k) {
  if (k < 1) throw PreconditionError("truncation must be >= 1");
}

// binom(e, j) for any integer e, j >= 0.
Integer generalized_binomial(Exponent e, int j) {
  Integer num = 1;
  Integer den = 1;
  for (int t = 0; t < j; ++t) {
    num *= Integer(e) - t;
    den *= t + 1;
  }
  return num / den;
}

template <class Accept>
MagnusSeries product(const MagnusSeries& a, const MagnusSeries& b, Accept accept) {
  const int k = std::min(a.truncation(), b.truncation());
  MagnusSeries out(k);
  Monomial m;
  for (const auto& [ma, ca] : a.terms()) {
    if (static_cast<int>(ma.size()) > k) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > k) break;
      m.assign(ma.begin(), ma.end());
      m.insert(m.end(), mb.begin(), mb.end());
      if (!accept(m)) continue;
      out.add(m, ca * cb);
    }
  }
  return out;
}

}  // namespace

bool has_repeated_index(std::span<const GenIndex> m) {
  std::set<GenIndex> seen;
  for (GenIndex i : m) {
    if (!seen.insert(i).second) return true;
  }
  return false;
}

MagnusSeries::MagnusSeries(int truncation) : truncation_(truncation) { check_truncation(truncation); }

MagnusSeries MagnusSeries::one(int truncation) {
  MagnusSeries s(truncation);
  s.terms_[{}] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator_power(GenIndex i, Exponent e, int truncation) {
  MagnusSeries s = one(truncation);
  Monomial m;
  for (int j = 1; j <= truncation; ++j) {
    m.push_back(i);
    s.add(m, generalized_binomial(e, j));
  }
  return s;
}

Integer MagnusSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool MagnusSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void MagnusSeries::add(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.size()) > truncation_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MagnusSeries MagnusSeries::without_repeated_indices() const {
  MagnusSeries out(truncation_);
  for (const auto& [m, c] : terms_) {
    if (!has_repeated_index(m)) out.terms_.emplace(m, c);
  }
  return out;
}

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b) {
  return product(a, b, [](const Monomial&) { return true; });
}

std::string to_string(const MagnusSeries& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    for (GenIndex i : m) out += "X" + std::to_string(i);
  }
  return out;
}

ReducedSeries::ReducedSeries(MagnusSeries s) : series_(s.without_repeated_indices()) {}

ReducedSeries multiply(const ReducedSeries& a, const ReducedSeries& b) {
  return ReducedSeries(
      product(a.series(), b.series(), [](const Monomial& m) { return !has_repeated_index(m); }));
}

MagnusSeries magnus_expand(const Word& w, int truncation) {
  MagnusSeries acc = MagnusSeries::one(truncation);
  for (const Letter& l : w.syllables()) acc = multiply(acc, MagnusSeries::generator_power(l.gen, l.exp, truncation));
  return acc;
}

ReducedSeries reduced_expand(const Word& w, int truncation) {
  ReducedSeries acc = ReducedSeries::one(truncation);
  for (const Letter& l : w.syllables()) {
    acc = multiply(acc, ReducedSeries(MagnusSeries::generator_power(l.gen, l.exp, truncation)));
  }
  return acc;
}

std::string GammaBound::to_string() const {
  return degree ? std::to_string(*degree) : ">= " + std::to_string(truncation + 1);
}

GammaBound gamma_class_lower_bound(const Word& w, int max_degree) {
  const MagnusSeries s = magnus_expand(w, max_degree);
  for (const auto& [m, c] : s.terms()) {
    if (!m.empty()) return GammaBound{static_cast<int>(m.size()), max_degree};
  }
  return GammaBound{std::nullopt, max_degree};
}

Integer mu_coefficient(const Word& w, std::span<const GenIndex> indices) {
  if (has_repeated_index(indices)) throw PreconditionError("mu indices must be pairwise distinct");
  if (indices.empty()) return 1;
  const Monomial m(indices.begin(), indices.end());
  return reduced_expand(w, static_cast<int>(m.size())).coefficient(m);
}

bool InvisibilityReport::all_passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

InvisibilityReport check_milnor_invisibility(int n, bool include_printed) {
  if (n != 4 && n != 5) throw PreconditionError("the invisibility check is provided for n = 4 or 5");
  InvisibilityReport report;
  report.n = n;

  auto run = [&](const std::string& subject, const hatf::HatFElement& z) {
    const bool cycle = hatf::is_cycle(z);
    report.lines.push_back({subject, "cycle", cycle, cycle ? "all faces trivial" : "some face nontrivial"});

    const GammaBound g = gamma_class_lower_bound(z.word(), n - 1);
    report.lines.push_back({subject, "gamma_" + std::to_string(n), !g.degree.has_value(), "class bound " + g.to_string()});

    const ReducedSeries r = reduced_expand(z.word(), n - 1);
    report.lines.push_back(
        {subject, "reduced expansion", r.is_one(), "truncation " + std::to_string(n - 1) + ": " + to_string(r.series())});
  };

  run("tower(" + std::to_string(n - 1) + ")", hatf::eta_tower(n - 1));
  if (include_printed) {
    run("printed", n == 4 ? hatf::printed_eta_word() : hatf::printed_eta_squared_word());
  }
  return report;
}

}  // namespace linkhom::magnus
