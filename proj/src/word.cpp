#include "linkhom/word.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

// Words longer than this are refused by power(); they only arise from
// absurd exponents on non-primitive words.
constexpr std::uint64_t kMaxPowerSyllables = 50'000'000;

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (l.exp == 0) return;
  if (!stack.empty() && stack.back().gen == l.gen) {
    Exponent e = checked_add(stack.back().exp, l.exp);
    if (e == 0) {
      stack.pop_back();
    } else {
      stack.back().exp = e;
    }
    return;
  }
  stack.push_back(l);
}

}  // namespace

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.syllables_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen == 0) throw PreconditionError("generator index must be >= 1");
    push_reduced(w.syllables_, l);
  }
  return w;
}

Word Word::generator(GenIndex i, Exponent e) { return reduce({Letter{i, e}}); }

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Letter& l : syllables_) n += static_cast<std::uint64_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

GenIndex Word::max_generator() const {
  GenIndex m = 0;
  for (const Letter& l : syllables_) m = std::max(m, l.gen);
  return m;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.syllable_count() + v.syllable_count());
  raw.insert(raw.end(), u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    if (it->exp == std::numeric_limits<Exponent>::min()) throw std::overflow_error("exponent overflow");
    raw.push_back({it->gen, -it->exp});
  }
  return Word::reduce(raw);
}

Word power(const Word& w, Exponent k) {
  if (k == 0 || w.is_identity()) return {};
  const Word base = k < 0 ? invert(w) : w;
  if (k == std::numeric_limits<Exponent>::min()) throw std::overflow_error("exponent overflow");
  const std::uint64_t times = static_cast<std::uint64_t>(k < 0 ? -k : k);

  // Split base = c u c^-1 with u cyclically reduced; then base^k = c u^k c^-1
  // and u^k needs no cancellation.
  const auto& s = base.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen && s[lo].exp == -s[hi - 1].exp) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(s.begin() + lo, s.begin() + hi);
  std::vector<Letter> raw(s.begin(), s.begin() + lo);
  if (core.size() == 1) {
    raw.push_back({core[0].gen, checked_mul(core[0].exp, static_cast<Exponent>(times))});
  } else {
    if (times > kMaxPowerSyllables / core.size()) throw std::overflow_error("word power too large");
    for (std::uint64_t t = 0; t < times; ++t) raw.insert(raw.end(), core.begin(), core.end());
  }
  raw.insert(raw.end(), s.begin() + hi, s.end());
  return Word::reduce(raw);
}

Word commutator(const Word& a, const Word& b) { return a * b * invert(a) * invert(b); }

Word conjugate(const Word& w, const Word& g) { return g * w * invert(g); }

GeneratorMap& GeneratorMap::set(GenIndex i, Word image) {
  if (i == 0) throw PreconditionError("generator index must be >= 1");
  images_[i] = std::move(image);
  return *this;
}

const Word* GeneratorMap::image_of(GenIndex i) const {
  auto it = images_.find(i);
  return it == images_.end() ? nullptr : &it->second;
}

GeneratorMap GeneratorMap::killing(GenIndex i) { return GeneratorMap{}.set(i, Word{}); }

Word apply_map(const GeneratorMap& m, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.syllable_count());
  for (const Letter& l : w.syllables()) {
    const Word* img = m.image_of(l.gen);
    if (img == nullptr) {
      raw.push_back(l);
      continue;
    }
    const Word p = power(*img, l.exp);
    raw.insert(raw.end(), p.syllables().begin(), p.syllables().end());
  }
  return Word::reduce(raw);
}

bool in_normal_closure(const Word& w, GenIndex i) {
  return apply_map(GeneratorMap::killing(i), w).is_identity();
}

}  // namespace linkhom
