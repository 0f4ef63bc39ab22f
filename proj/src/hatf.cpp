#include "linkhom/hatf.hpp"

#include <charconv>
#include <numeric>
#include <random>
#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/word_parser.hpp"

namespace linkhom::hatf {

namespace {

// x1 x2 ... xm
Word prefix_product(int m) {
  std::vector<Letter> raw;
  for (int j = 1; j <= m; ++j) raw.push_back({static_cast<GenIndex>(j), 1});
  return Word::reduce(raw);
}

void check_degree(int degree) {
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
}

GeneratorMap face_map(int i, int n) {
  GeneratorMap m;
  for (int j = 1; j <= n + 1; ++j) {
    const auto g = static_cast<GenIndex>(j);
    if (j == i + 1) {
      m.set(g, Word{});
    } else if (j > i + 1) {
      m.set(g, Word::generator(g - 1));
    }
  }
  return m;
}

GeneratorMap degeneracy_map(int i, int n) {
  GeneratorMap m;
  for (int j = 1; j <= n + 1; ++j) {
    const auto g = static_cast<GenIndex>(j);
    if (j == i + 1) {
      m.set(g, Word::generator(g) * Word::generator(g + 1));
    } else if (j > i + 1) {
      m.set(g, Word::generator(g + 1));
    }
  }
  return m;
}

}  // namespace

HatFElement::HatFElement(int degree, const Word& w) : degree_(degree) {
  check_degree(degree);
  const GenIndex top = static_cast<GenIndex>(degree) + 1;
  if (w.max_generator() > top) {
    throw PreconditionError("generator x" + std::to_string(w.max_generator()) + " does not exist in degree " +
                            std::to_string(degree));
  }
  word_ = apply_map(GeneratorMap{}.set(top, invert(prefix_product(degree))), w);
}

HatFElement operator*(const HatFElement& a, const HatFElement& b) {
  if (a.degree() != b.degree()) throw PreconditionError("degree mismatch");
  return HatFElement(a.degree(), a.word() * b.word());
}

HatFElement inverse(const HatFElement& a) { return HatFElement(a.degree(), invert(a.word())); }

HatFElement commutator(const HatFElement& a, const HatFElement& b) {
  if (a.degree() != b.degree()) throw PreconditionError("degree mismatch");
  return HatFElement(a.degree(), linkhom::commutator(a.word(), b.word()));
}

HatFElement face(int i, const HatFElement& e) {
  const int n = e.degree();
  if (n < 1) throw PreconditionError("faces are not defined in degree 0");
  if (i < 0 || i > n) throw PreconditionError("face index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
  return HatFElement(n - 1, apply_map(face_map(i, n), e.word()));
}

HatFElement degeneracy(int i, const HatFElement& e) {
  const int n = e.degree();
  if (i < 0 || i > n) {
    throw PreconditionError("degeneracy index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
  }
  return HatFElement(n + 1, apply_map(degeneracy_map(i, n), e.word()));
}

bool is_moore_chain(const HatFElement& e) {
  for (int i = 1; i <= e.degree(); ++i) {
    if (!face(i, e).is_identity()) return false;
  }
  return true;
}

bool is_cycle(const HatFElement& e) {
  if (e.degree() == 0) return true;
  return face(0, e).is_identity() && is_moore_chain(e);
}

bool is_cycle_by_normal_closures(const HatFElement& e) {
  const int n = e.degree();
  for (int i = 1; i <= n; ++i) {
    if (!in_normal_closure(e.word(), static_cast<GenIndex>(i))) return false;
  }
  if (n == 0) return true;
  // Basis x2..x_{n+1}: x1 = (x2 ... x_{n+1})^-1.
  std::vector<Letter> tail;
  for (int j = 2; j <= n + 1; ++j) tail.push_back({static_cast<GenIndex>(j), 1});
  const Word rebased = apply_map(GeneratorMap{}.set(1, invert(Word::reduce(tail))), e.word());
  return in_normal_closure(rebased, static_cast<GenIndex>(n + 1));
}

HatFElement eta_word(const HatFElement& z) {
  if (z.degree() < 1) throw PreconditionError("eta needs degree >= 1");
  if (!is_cycle(z)) throw PreconditionError("eta is only defined on cycles");
  return commutator(degeneracy(0, z), degeneracy(1, z));
}

HatFElement eta_tower(int k) {
  if (k < 1) throw PreconditionError("tower index must be >= 1");
  HatFElement z(1, Word::generator(1));
  for (int d = 1; d < k; ++d) z = eta_word(z);
  return z;
}

BracketExpr::BracketExpr(Word leaf) : node_(std::move(leaf)) {}

BracketExpr::BracketExpr(BracketExpr left, BracketExpr right)
    : node_(Pair{std::make_shared<const BracketExpr>(std::move(left)),
                 std::make_shared<const BracketExpr>(std::move(right))}) {}

Word BracketExpr::evaluate() const {
  if (const auto* w = std::get_if<Word>(&node_)) return *w;
  const auto& p = std::get<Pair>(node_);
  return linkhom::commutator(p.left->evaluate(), p.right->evaluate());
}

BracketExpr BracketExpr::map_leaves(const GeneratorMap& m) const {
  if (const auto* w = std::get_if<Word>(&node_)) return BracketExpr(apply_map(m, *w));
  const auto& p = std::get<Pair>(node_);
  return BracketExpr(p.left->map_leaves(m), p.right->map_leaves(m));
}

std::string BracketExpr::to_string(char letter) const {
  if (const auto* w = std::get_if<Word>(&node_)) {
    std::string s = print_word(*w, letter);
    for (char& c : s) {
      if (c == ' ') c = '*';
    }
    return s;
  }
  const auto& p = std::get<Pair>(node_);
  return "[" + p.left->to_string(letter) + ", " + p.right->to_string(letter) + "]";
}

BracketExpr eta_tower_expression(int k) {
  if (k < 1) throw PreconditionError("tower index must be >= 1");
  BracketExpr e(Word::generator(1));
  for (int n = 1; n < k; ++n) e = BracketExpr(e.map_leaves(degeneracy_map(0, n)), e.map_leaves(degeneracy_map(1, n)));
  return e;
}

HatFElement printed_eta_word() { return HatFElement(3, parse_word(kPrintedEtaWord)); }

HatFElement printed_eta_squared_word() { return HatFElement(4, parse_word(kPrintedEtaSquaredWord)); }

HatFElement symmetric_commutator_sample(int degree, std::uint64_t seed) {
  if (degree < 1) throw PreconditionError("degree must be >= 1");
  const int slots = degree + 1;  // one kernel generator x_{i+1} per face d_i
  std::vector<Word> entries;
  entries.reserve(slots);
  std::vector<int> order(slots);
  std::iota(order.begin(), order.end(), 0);

  if (seed == 0) {
    for (int i = 0; i < slots; ++i) entries.push_back(Word::generator(static_cast<GenIndex>(i + 1)));
  } else {
    std::mt19937_64 rng(seed);
    auto below = [&rng](std::uint64_t bound) { return rng() % bound; };
    for (int i = slots - 1; i > 0; --i) std::swap(order[i], order[below(static_cast<std::uint64_t>(i) + 1)]);
    for (int i = 0; i < slots; ++i) {
      // Conjugator of at most 4 syllables over x1..x_{n+1}, exponents ±1.
      std::vector<Letter> conj;
      const auto len = below(5);
      GenIndex prev = 0;
      for (std::uint64_t t = 0; t < len; ++t) {
        GenIndex g;
        do {
          g = static_cast<GenIndex>(below(static_cast<std::uint64_t>(slots)) + 1);
        } while (g == prev);
        prev = g;
        conj.push_back({g, below(2) == 0 ? 1 : -1});
      }
      static constexpr Exponent kPowers[] = {1, -1, 2, -2};
      const Word base = Word::generator(static_cast<GenIndex>(i + 1), kPowers[below(4)]);
      entries.push_back(conjugate(base, Word::reduce(conj)));
    }
  }

  Word acc = entries[order[0]];
  for (int t = 1; t < slots; ++t) acc = linkhom::commutator(acc, entries[order[t]]);
  return HatFElement(degree, acc);
}

MeridianWord meridian_word(int k) {
  if (k != 4 && k != 5) throw PreconditionError("meridian words are provided for k = 4 or 5");
  const BracketExpr expr = eta_tower_expression(k - 1);
  return MeridianWord{k, eta_tower(k - 1).word(), expr.to_string('a')};
}

std::string to_string(const HatFElement& e) {
  return "degree=" + std::to_string(e.degree()) + "; word=" + print_word(e.word());
}

HatFElement parse_element(std::string_view text) {
  constexpr std::string_view kDeg = "degree=";
  constexpr std::string_view kWord = "word=";
  std::size_t pos = text.find_first_not_of(" \t");
  if (pos == std::string_view::npos || text.substr(pos, kDeg.size()) != kDeg) throw ParseError(pos, "expected 'degree='");
  pos += kDeg.size();
  int degree = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), degree);
  if (ec != std::errc{} || degree < 0) throw ParseError(pos, "expected a nonnegative degree");
  pos = static_cast<std::size_t>(ptr - text.data());
  pos = text.find_first_not_of(" \t", pos);
  if (pos == std::string_view::npos || text[pos] != ';') throw ParseError(pos == std::string_view::npos ? text.size() : pos, "expected ';'");
  pos = text.find_first_not_of(" \t", pos + 1);
  if (pos == std::string_view::npos || text.substr(pos, kWord.size()) != kWord) {
    throw ParseError(pos == std::string_view::npos ? text.size() : pos, "expected 'word='");
  }
  pos += kWord.size();
  try {
    return HatFElement(degree, parse_word(text.substr(pos)));
  } catch (const ParseError& err) {
    throw ParseError(pos + err.position(), err.message());
  }
}

}  // namespace linkhom::hatf
