#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "fcwreath/dihedral.hpp"
#include "test_support.hpp"

using namespace fcwreath;
using fcwreath::testkit::ab_word_to_normal_form;
using fcwreath::testkit::all_ab_words;
using fcwreath::testkit::reduce_ab;

TEST(Dihedral, NamedElements) {
  EXPECT_EQ(Dihedral::a(), (Dihedral{0, 1}));
  EXPECT_EQ(Dihedral::b(), (Dihedral{-1, 1}));
  EXPECT_EQ(d_mul(Dihedral::a(), Dihedral::b()), Dihedral::ab());
  const Dihedral ba = d_mul(Dihedral::b(), Dihedral::a());
  EXPECT_EQ(d_mul(ba, ba), (Dihedral{-2, 0}));
}

TEST(Dihedral, MulExamples) {
  EXPECT_EQ(d_mul({0, 1}, {0, 1}), (Dihedral{0, 0}));
  EXPECT_EQ(d_mul({-1, 1}, {0, 1}), (Dihedral{-1, 0}));
  EXPECT_EQ(d_mul({-1, 0}, {-1, 0}), (Dihedral{-2, 0}));
  // b * a reduces to the alternating word "ba".
  EXPECT_EQ(ab_word_to_normal_form(reduce_ab("ba")), (Dihedral{-1, 0}));
}

TEST(Dihedral, InverseExamples) {
  EXPECT_EQ(d_inv({0, 0}), (Dihedral{0, 0}));
  EXPECT_EQ(d_inv({5, 0}), (Dihedral{-5, 0}));
  EXPECT_EQ(d_inv({3, 1}), (Dihedral{3, 1}));
  EXPECT_TRUE(d_mul({3, 1}, {3, 1}).is_identity());
}

TEST(Dihedral, OrderExamples) {
  EXPECT_EQ(d_order({0, 0}), Order::One);
  EXPECT_EQ(d_order({7, 1}), Order::Two);
  EXPECT_EQ(d_order({-2, 0}), Order::Infinite);
}

TEST(Dihedral, PhiExamples) {
  EXPECT_EQ(phi(Dihedral::a()), (PhiPair{1, 0}));
  EXPECT_EQ(phi(Dihedral::b()), (PhiPair{0, 1}));
  EXPECT_EQ(phi({-2, 0}), (PhiPair{0, 0}));
}

TEST(Dihedral, DerivedSubgroupExamples) {
  EXPECT_TRUE(in_derived({-2, 0}));
  EXPECT_FALSE(in_derived({1, 0}));
  EXPECT_FALSE(in_derived({0, 1}));
}

TEST(Dihedral, Rendering) {
  EXPECT_EQ(to_string(Dihedral{0, 0}), "e");
  EXPECT_EQ(to_string(Dihedral{0, 1}), "a");
  EXPECT_EQ(to_string(Dihedral{-2, 0}), "(ab)^-2");
  EXPECT_EQ(to_string(Dihedral{3, 1}), "(ab)^3 a");
}

TEST(Dihedral, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(d_mul({big, 0}, {1, 0}), OverflowError);
  EXPECT_THROW(d_mul({-big, 1}, {2, 0}), OverflowError);
  EXPECT_THROW(d_inv({std::numeric_limits<std::int64_t>::min(), 0}), OverflowError);
}

TEST(Dihedral, GroupLawsRandomized) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const Dihedral x = testkit::random_dihedral(rng), y = testkit::random_dihedral(rng), z = testkit::random_dihedral(rng);
    EXPECT_EQ(d_mul(d_mul(x, y), z), d_mul(x, d_mul(y, z)));
    EXPECT_TRUE(d_mul(x, d_inv(x)).is_identity());
    EXPECT_TRUE(d_mul(d_inv(x), x).is_identity());
    EXPECT_EQ(d_mul(Dihedral::identity(), x), x);
    EXPECT_EQ(d_mul(x, Dihedral::identity()), x);
  }
}

TEST(Dihedral, PhiIsHomomorphismRandomized) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 5000; ++i) {
    const Dihedral x = testkit::random_dihedral(rng), y = testkit::random_dihedral(rng);
    const PhiPair px = phi(x), py = phi(y), pxy = phi(d_mul(x, y));
    EXPECT_EQ(pxy.a, (px.a + py.a) % 2);
    EXPECT_EQ(pxy.b, (px.b + py.b) % 2);
  }
}

// Brute force over all words of length <= 8 in {a, b}: the multiplication
// law reproduces free reduction, and phi counts letters.
TEST(Dihedral, AgreesWithFreeReductionOracle) {
  for (const auto& w : all_ab_words(8)) {
    Dihedral prod;
    int na = 0, nb = 0;
    for (char c : w) {
      prod = d_mul(prod, c == 'a' ? Dihedral::a() : Dihedral::b());
      (c == 'a' ? na : nb)++;
    }
    ASSERT_EQ(prod, ab_word_to_normal_form(reduce_ab(w))) << w;
    ASSERT_EQ(phi(prod), (PhiPair{na % 2, nb % 2})) << w;
  }
}

TEST(Dihedral, OrderAndPhiExhaustive) {
  for (std::int64_t n = -100; n <= 100; ++n) {
    for (std::uint8_t e = 0; e <= 1; ++e) {
      const Dihedral x{n, e};
      const PhiPair p = phi(x);
      if (p == PhiPair{1, 1}) {
        EXPECT_EQ(d_order(x), Order::Infinite);
      }
      if (d_order(x) == Order::Two) {
        EXPECT_TRUE((p == PhiPair{1, 0}) || (p == PhiPair{0, 1}));
        EXPECT_TRUE(d_mul(x, x).is_identity());
      }
      if (in_derived(x)) {
        EXPECT_EQ(p, (PhiPair{0, 0}));
      }
    }
  }
}
