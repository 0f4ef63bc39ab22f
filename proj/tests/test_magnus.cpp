#include <gtest/gtest.h>

#include <array>

#include "linkhom/errors.hpp"
#include "linkhom/hatf.hpp"
#include "linkhom/magnus.hpp"
#include "linkhom/word_parser.hpp"
#include "support.hpp"

using namespace linkhom;
using namespace linkhom::magnus;
using testsupport::Rng;

namespace {

Word w(std::string_view s) { return parse_word(s); }

// Random iterated commutator of weight c in generators 1..3.
Word random_bracket(Rng& rng, int c) {
  std::uniform_int_distribution<GenIndex> gen(1, 3);
  if (c == 1) {
    Word g = Word::generator(gen(rng), rng() % 2 ? 1 : -1);
    // conjugating keeps the weight
    return conjugate(g, testsupport::random_word(rng, 3, 3));
  }
  std::uniform_int_distribution<int> split(1, c - 1);
  const int a = split(rng);
  return commutator(random_bracket(rng, a), random_bracket(rng, c - a));
}

}  // namespace

TEST(Magnus, SmallExpansions) {
  EXPECT_EQ(to_string(magnus_expand(w("x1"), 3)), "1 + X1");
  EXPECT_EQ(to_string(magnus_expand(w("x1^2"), 3)), "1 + 2*X1 + X1X1");
  EXPECT_EQ(to_string(magnus_expand(w("x1^-1"), 3)), "1 - X1 + X1X1 - X1X1X1");
  EXPECT_EQ(to_string(magnus_expand(w("[x1, x2]"), 2)), "1 + X1X2 - X2X1");
  EXPECT_EQ(to_string(magnus_expand(Word{}, 2)), "1");
  EXPECT_TRUE(magnus_expand(Word{}, 4).is_one());
}

TEST(Magnus, TruncationIsMandatoryAndPositive) {
  EXPECT_THROW(MagnusSeries(0), PreconditionError);
  EXPECT_THROW(magnus_expand(w("x1"), 0), PreconditionError);
}

TEST(Magnus, GammaBounds) {
  EXPECT_EQ(gamma_class_lower_bound(w("x1"), 4).to_string(), "1");
  EXPECT_EQ(gamma_class_lower_bound(w("[x1, x2]"), 4).to_string(), "2");
  EXPECT_EQ(gamma_class_lower_bound(w("[[x1,x2],[x1,x3]]"), 3).to_string(), ">= 4");
  EXPECT_EQ(gamma_class_lower_bound(w("[[x1,x2],[x1,x3]]"), 4).to_string(), "4");
  EXPECT_EQ(gamma_class_lower_bound(Word{}, 2).to_string(), ">= 3");
}

TEST(Magnus, MuCoefficients) {
  const std::array<GenIndex, 2> i12{1, 2};
  const std::array<GenIndex, 2> i21{2, 1};
  EXPECT_EQ(mu_coefficient(w("[x1,x2]"), i12), 1);
  EXPECT_EQ(mu_coefficient(w("[x1,x2]"), i21), -1);
  const std::array<GenIndex, 3> i123{1, 2, 3};
  EXPECT_EQ(mu_coefficient(w("[[x1,x2],x3]"), i123), 1);
  const std::array<GenIndex, 2> rep{1, 1};
  EXPECT_THROW(mu_coefficient(w("x1"), rep), PreconditionError);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_EQ(mu_coefficient(power(w("[x1,x2]"), k), i12), k) << k;
  }
}

TEST(Magnus, ReducedDropsRepeatedIndices) {
  EXPECT_EQ(to_string(reduced_expand(w("x1^2 x2"), 3).series()), "1 + 2*X1 + X2 + 2*X1X2");
  EXPECT_TRUE(has_repeated_index(std::vector<GenIndex>{1, 2, 1}));
  EXPECT_FALSE(has_repeated_index(std::vector<GenIndex>{3, 1, 2}));
}

TEST(Magnus, InvisibilityReport) {
  for (int n : {4, 5}) {
    const auto r = check_milnor_invisibility(n, false);
    EXPECT_TRUE(r.all_passed()) << n;
    EXPECT_EQ(r.lines.size(), 3u);
  }
  EXPECT_THROW(check_milnor_invisibility(3, false), PreconditionError);
}

TEST(Magnus, TowerInvisibleButPresent) {
  // tower(3) dies in every degree below 4 but not in degree 4
  const Word z = hatf::eta_tower(3).word();
  EXPECT_EQ(gamma_class_lower_bound(z, 4).to_string(), "4");
  EXPECT_TRUE(reduced_expand(z, 3).is_one());
}

TEST(MagnusProperty, BinomialRouteMatchesLetterByLetter) {
  Rng rng(31);
  for (int t = 0; t < 500; ++t) {
    const Word a = testsupport::random_word(rng, 3, 6, 3);
    const int k = 1 + static_cast<int>(rng() % 4);
    ASSERT_EQ(magnus_expand(a, k), testsupport::naive_magnus(a, k)) << print_word(a);
  }
}

TEST(MagnusProperty, ReducedRouteMatchesFilter) {
  Rng rng(32);
  for (int t = 0; t < 500; ++t) {
    const Word a = testsupport::random_word(rng, 4, 6, 3);
    const int k = 1 + static_cast<int>(rng() % 4);
    ASSERT_EQ(reduced_expand(a, k).series(), magnus_expand(a, k).without_repeated_indices()) << print_word(a);
  }
}

TEST(MagnusProperty, Multiplicative) {
  Rng rng(33);
  for (int t = 0; t < 500; ++t) {
    const Word a = testsupport::random_word(rng, 3);
    const Word b = testsupport::random_word(rng, 3);
    ASSERT_EQ(magnus_expand(a * b, 4), multiply(magnus_expand(a, 4), magnus_expand(b, 4)));
    ASSERT_TRUE(multiply(magnus_expand(a, 4), magnus_expand(invert(a), 4)).is_one());
  }
}

TEST(MagnusProperty, CommutatorWeightVanishesBelowDegree) {
  Rng rng(34);
  for (int t = 0; t < 300; ++t) {
    const int c = 2 + t % 4;  // 2..5
    const Word b = random_bracket(rng, c);
    const GammaBound g = gamma_class_lower_bound(b, c - 1);
    ASSERT_FALSE(g.degree.has_value()) << c << " " << print_word(b);
  }
}

TEST(MagnusProperty, DegreeTwoAntisymmetry) {
  Rng rng(35);
  for (int t = 0; t < 300; ++t) {
    const Word a = testsupport::random_word(rng, 3);
    const Word b = testsupport::random_word(rng, 3);
    const MagnusSeries s = magnus_expand(commutator(a, b), 2);
    for (GenIndex i = 1; i <= 3; ++i) {
      for (GenIndex j = 1; j <= 3; ++j) {
        ASSERT_EQ(s.coefficient({i, j}), -s.coefficient({j, i}));
      }
      ASSERT_EQ(s.coefficient({i}), 0);
    }
  }
}
