#pragma once

// Seeded generators and independent oracles shared by the unit, property and
// acceptance tests.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/hatf.hpp"
#include "linkhom/magnus.hpp"
#include "linkhom/profile.hpp"
#include "linkhom/word.hpp"

namespace testsupport {

using linkhom::Exponent;
using linkhom::GenIndex;
using linkhom::Letter;
using linkhom::Word;

using Rng = std::mt19937_64;

/// Raw (unreduced) letter list; cancellations are likely on purpose.
inline std::vector<Letter> random_letters(Rng& rng, GenIndex max_gen, int max_len, int max_exp) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<GenIndex> gen(1, max_gen);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::vector<Letter> out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = 0;
    while (e == 0) e = ex(rng);
    out.push_back({gen(rng), e});
  }
  return out;
}

inline Word random_word(Rng& rng, GenIndex max_gen, int max_len = 8, int max_exp = 2) {
  return Word::reduce(random_letters(rng, max_gen, max_len, max_exp));
}

/// Letter-by-letter stack reduction over ±1 letters, merged into syllables
/// only at the end.
inline std::vector<Letter> naive_reduce(const std::vector<Letter>& raw) {
  std::vector<std::pair<GenIndex, int>> stack;
  for (const auto& l : raw) {
    const int sign = l.exp > 0 ? 1 : -1;
    for (Exponent k = 0; k < (l.exp > 0 ? l.exp : -l.exp); ++k) {
      if (!stack.empty() && stack.back().first == l.gen && stack.back().second == -sign) {
        stack.pop_back();
      } else {
        stack.emplace_back(l.gen, sign);
      }
    }
  }
  std::vector<Letter> out;
  for (auto [g, s] : stack) {
    if (!out.empty() && out.back().gen == g) {
      out.back().exp += s;
    } else {
      out.push_back({g, s});
    }
  }
  return out;
}

/// Magnus expansion by multiplying out one ±1 letter at a time, using the
/// alternating geometric series for inverses.
inline linkhom::magnus::MagnusSeries naive_magnus(const Word& w, int k) {
  using linkhom::magnus::MagnusSeries;
  MagnusSeries acc = MagnusSeries::one(k);
  for (const auto& l : w.syllables()) {
    MagnusSeries letter(k);
    if (l.exp > 0) {
      letter.add({}, 1);
      letter.add({l.gen}, 1);
    } else {
      for (int j = 0; j <= k; ++j) letter.add(linkhom::magnus::Monomial(static_cast<std::size_t>(j), l.gen), j % 2 ? -1 : 1);
    }
    const Exponent reps = l.exp > 0 ? l.exp : -l.exp;
    for (Exponent r = 0; r < reps; ++r) acc = linkhom::magnus::multiply(acc, letter);
  }
  return acc;
}

/// Splitting profile of a link whose components are unknots clasped along
/// the edges of a graph (Hopf clasps) and along hyperedges (Brunnian
/// clusters, linked only when every member is present). ν(T) is the number of
/// connected pieces of T minus one.
struct LinkingModel {
  int n = 0;
  std::vector<std::uint32_t> hyperedges;  // bitmasks; size 2 = ordinary clasp

  linkhom::links::LinkProfile profile() const {
    std::vector<int> nu(std::size_t{1} << n);
    for (std::uint32_t t = 0; t < nu.size(); ++t) {
      // union-find over the members of t
      std::vector<int> parent(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (auto e : hyperedges) {
        if ((e & t) != e) continue;
        int first = -1;
        for (int i = 0; i < n; ++i) {
          if (!(e >> i & 1)) continue;
          if (first < 0) {
            first = i;
          } else {
            parent[find(i)] = find(first);
          }
        }
      }
      int pieces = 0;
      for (int i = 0; i < n; ++i) {
        if ((t >> i & 1) && find(i) == i) ++pieces;
      }
      nu[t] = pieces - 1;
    }
    return linkhom::links::LinkProfile(n, std::move(nu));
  }
};

/// Random graph model (hyper = false) or mixed graph/hypergraph model.
inline LinkingModel random_model(Rng& rng, int n, bool hyper) {
  LinkingModel m;
  m.n = n;
  std::bernoulli_distribution coin(0.45);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) m.hyperedges.push_back((1u << i) | (1u << j));
    }
  }
  if (hyper) {
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
    for (int c = count(rng); c > 0; --c) {
      std::uint32_t e = 0;
      while (std::popcount(e) < 3) e = mask(rng);
      m.hyperedges.push_back(e);
    }
  }
  return m;
}

/// Every simplicial identity that applies to an element of degree n. Returns
/// the first failure, or an empty string.
inline std::string simplicial_identity_failure(const linkhom::hatf::HatFElement& x) {
  using namespace linkhom::hatf;
  const int n = x.degree();
  auto tag = [](const char* what, int i, int j) {
    return std::string(what) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  // d_i d_j = d_{j-1} d_i for i < j
  if (n >= 2) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (face(i, face(j, x)) != face(j - 1, face(i, x))) return tag("d_i d_j", i, j);
      }
    }
  }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (degeneracy(i, degeneracy(j, x)) != degeneracy(j + 1, degeneracy(i, x))) return tag("s_i s_j", i, j);
    }
  }
  // d_i s_j on degree n+1
  for (int j = 0; j <= n; ++j) {
    const HatFElement sx = degeneracy(j, x);
    for (int i = 0; i <= n + 1; ++i) {
      HatFElement expect;
      if (i < j) {
        if (n == 0) continue;
        expect = degeneracy(j - 1, face(i, x));
      } else if (i == j || i == j + 1) {
        expect = x;
      } else {
        if (n == 0) continue;
        expect = degeneracy(j, face(i - 1, x));
      }
      if (face(i, sx) != expect) return tag("d_i s_j", i, j);
    }
  }
  return {};
}

}  // namespace testsupport
