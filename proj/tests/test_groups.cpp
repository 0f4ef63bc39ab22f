#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "linkhom/errors.hpp"
#include "linkhom/groups.hpp"
#include "linkhom/hilton.hpp"
#include "support.hpp"

using namespace linkhom;
using namespace linkhom::groups;

namespace {

// Necklace count of Lyndon words of length len over k letters.
long witt(int k, int len) {
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      r = -r;
    }
    return d > 1 ? -r : r;
  };
  long sum = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d) continue;
    long pw = 1;
    for (int e = 0; e < len / d; ++e) pw *= k;
    sum += mobius(d) * pw;
  }
  return sum / len;
}

bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (!(w < rot)) return false;
  }
  return true;
}

HomotopyTable builtin() { return HomotopyTable{}; }

}  // namespace

TEST(Groups, Rendering) {
  EXPECT_EQ(render(Trivial{}), "0");
  EXPECT_EQ(render(integers()), "Z");
  EXPECT_EQ(render(cyclic(12)), "Z/12");
  EXPECT_EQ(render(cyclic(1)), "0");
  EXPECT_EQ(render(FreeAbelian{3}), "Z^3");
  EXPECT_EQ(render(FreeAbelian{}), "Z^(countable)");
  EXPECT_EQ(render(PiOfSphere{7, 3}), "pi_7(S^3)");
  EXPECT_EQ(render(PiOfSphere{7, 3}, true), "pi_7(S^3) [unknown]");
  EXPECT_EQ(render(DirectSum{{integers(), cyclic(2)}}), "Z + Z/2");
  EXPECT_EQ(render(PiOfWedge{3, SphereWedge{{2, 2}, {}}}), "pi_3(S^2 v S^2)");
  EXPECT_EQ(to_string(SphereWedge{}), "*");
}

TEST(Groups, ParseAndIsomorphism) {
  EXPECT_EQ(parse_group("Z/2"), cyclic(2));
  EXPECT_EQ(render(parse_group("Z + Z/12")), "Z + Z/12");
  EXPECT_TRUE(isomorphic(parse_group("Z^3"), parse_group("Z + Z + Z")));
  EXPECT_TRUE(isomorphic(parse_group("Z/2 + Z"), parse_group("Z + Z/2 + 0")));
  EXPECT_FALSE(isomorphic(parse_group("Z/2"), parse_group("Z/4")));
  EXPECT_THROW(parse_group("Q"), std::invalid_argument);
  EXPECT_THROW(parse_group("Z +"), std::invalid_argument);
  EXPECT_THROW(parse_group("Z/0"), std::invalid_argument);
}

TEST(Table, BuiltinsAndRules) {
  const auto t = builtin();
  EXPECT_EQ(homotopy_table_lookup(t, 6, 3), cyclic(12));
  EXPECT_EQ(homotopy_table_lookup(t, 4, 3), cyclic(2));
  EXPECT_EQ(homotopy_table_lookup(t, 5, 3), cyclic(2));
  EXPECT_EQ(homotopy_table_lookup(t, 3, 2), integers());
  EXPECT_EQ(homotopy_table_lookup(t, 4, 2), cyclic(2));
  EXPECT_EQ(homotopy_table_lookup(t, 5, 2), cyclic(2));
  EXPECT_EQ(homotopy_table_lookup(t, 5, 7), Trivial{});
  EXPECT_EQ(homotopy_table_lookup(t, 4, 4), integers());
  EXPECT_EQ(homotopy_table_lookup(t, 7, 3), (PiOfSphere{7, 3}));
  EXPECT_FALSE(t.lookup(7, 3).has_value());
  EXPECT_THROW(t.lookup(0, 2), PreconditionError);
}

TEST(Table, LoadingNeedsProvenance) {
  HomotopyTable t;
  std::istringstream ok("# extra\n7 3 Z/2 | some source\n7 4 Z + Z/12 | another\n");
  t.load(ok);
  EXPECT_EQ(t.lookup(7, 3)->provenance, "some source");
  EXPECT_FALSE(t.lookup(7, 3)->builtin);
  EXPECT_EQ(render(t.lookup(7, 4)->group), "Z + Z/12");

  auto line_of = [](const std::string& text) -> std::size_t {
    HomotopyTable u;
    std::istringstream in(text);
    try {
      u.load(in);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("7 3 Z/2\n"), 1u);
  EXPECT_EQ(line_of("\n7 3 Z/2 |   \n"), 2u);
  EXPECT_EQ(line_of("7 x Z/2 | src\n"), 1u);
  EXPECT_EQ(line_of("7 3 Q | src\n"), 1u);
  EXPECT_THROW(t.add(4, 3, cyclic(3), "wrong"), PreconditionError);
  EXPECT_THROW(t.add(8, 3, cyclic(2), ""), PreconditionError);
  EXPECT_NO_THROW(t.add(4, 3, cyclic(2), "agrees"));
}

TEST(Lyndon, CountsMatchNecklaceFormula) {
  for (int k = 1; k <= 4; ++k) {
    const int maxlen = k <= 2 ? 8 : 5;
    const auto words = hilton::lyndon_words(k, maxlen);
    std::map<int, long> count;
    for (const auto& w : words) {
      ASSERT_TRUE(is_lyndon(w));
      ++count[static_cast<int>(w.size())];
    }
    for (int len = 1; len <= maxlen; ++len) EXPECT_EQ(count[len], witt(k, len)) << k << " " << len;
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end(),
                               [](const auto& a, const auto& b) { return a.size() < b.size(); }));
  }
  EXPECT_TRUE(hilton::lyndon_words(0, 3).empty());
}

TEST(Hilton, Examples) {
  const auto t = builtin();
  const std::vector<int> two{2, 2};
  EXPECT_EQ(render(hilton::hilton_pi(3, two, t)), "Z + Z + Z");
  EXPECT_EQ(render(hilton::hilton_pi(4, two, t)), "Z/2 + Z/2 + Z/2 + Z + Z");
  for (int n = 2; n <= 6; ++n) {
    const std::vector<int> one{n};
    EXPECT_EQ(hilton::hilton_pi(n, one, t), integers());
  }
  EXPECT_EQ(render(hilton::hilton_pi(7, std::vector<int>{3}, t), true), "pi_7(S^3) [unknown]");
  EXPECT_EQ(hilton::hilton_pi(3, std::vector<int>{}, t), Trivial{});
  EXPECT_THROW(hilton::hilton_pi(3, std::vector<int>{1}, t), PreconditionError);
  EXPECT_THROW(hilton::hilton_pi(1, two, t), PreconditionError);
}

TEST(Hilton, TermDimensions) {
  const auto terms = hilton::hilton_terms(4, std::vector<int>{2, 2}, builtin());
  std::vector<int> dims;
  for (const auto& term : terms) dims.push_back(term.sphere_dim);
  EXPECT_EQ(dims, (std::vector<int>{2, 2, 3, 4, 4}));
}

TEST(Hilton, Evaluate) {
  const auto t = builtin();
  EXPECT_EQ(render(*hilton::evaluate(PiOfSphere{6, 3}, t)), "Z/12");
  EXPECT_FALSE(hilton::evaluate(PiOfSphere{7, 3}, t).has_value());
  EXPECT_FALSE(hilton::evaluate(Symbolic{"G"}, t).has_value());
  EXPECT_FALSE(hilton::evaluate(PiOfWedge{3, SphereWedge{{2}, "K(G,1)"}}, t).has_value());
  EXPECT_EQ(render(*hilton::evaluate(DirectSum{{PiOfSphere{4, 3}, PiOfSphere{2, 3}}}, t)), "Z/2");
}

TEST(HiltonProperty, OrderIndependent) {
  testsupport::Rng rng(51);
  const auto t = builtin();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> dims(1 + rng() % 3);
    for (int& d : dims) d = 2 + static_cast<int>(rng() % 3);
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto base = hilton::hilton_pi(n, dims, t);
    std::shuffle(dims.begin(), dims.end(), rng);
    ASSERT_TRUE(isomorphic(base, hilton::hilton_pi(n, dims, t)));
  }
}
