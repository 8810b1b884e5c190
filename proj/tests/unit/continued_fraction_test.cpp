#include <gtest/gtest.h>

#include <numeric>

#include "suslink/continued_fraction.hpp"
#include "suslink/error.hpp"
#include "test_support.hpp"

using namespace suslink;
using suslink::testing::ints;

namespace {

// Independent evaluation with integer convergents: p/q for b1 - 1/(b2 - ...).
std::pair<long long, long long> eval_oracle(const std::vector<long long>& b) {
  long long p = 1, q = 0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    long long np = *it * p - q;
    q = p;
    p = np;
  }
  return {p, q};
}

}  // namespace

TEST(ContinuedFraction, ExpandExamples) {
  EXPECT_EQ(neg_cf_expand(3, 2), ints({2, 2}));
  EXPECT_EQ(neg_cf_expand(31, 25), ints({2, 2, 2, 2, 7}));
  EXPECT_EQ(neg_cf_expand(11, 1), ints({11}));
  EXPECT_EQ(neg_cf_expand(145, 17), ints({9, 3, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(neg_cf_expand(31, 13), ints({3, 2, 3, 3}));
  EXPECT_EQ(neg_cf_expand(29, 17), ints({2, 4, 2, 3}));
}

TEST(ContinuedFraction, EvalExamples) {
  EXPECT_EQ(neg_cf_eval(ints({2, 2})), Rational(Integer(3), Integer(2)));
  EXPECT_EQ(neg_cf_eval(ints({3, 2, 3, 3})), Rational(Integer(31), Integer(13)));
  EXPECT_EQ(neg_cf_eval(ints({9, 3, 2, 2, 2, 2, 2, 2, 2})), Rational(Integer(145), Integer(17)));
  EXPECT_EQ(neg_cf_eval(ints({6})), Rational(6));
}

TEST(ContinuedFraction, ExpandRejectsInvalid) {
  EXPECT_THROW(neg_cf_expand(5, 0), Error);
  EXPECT_THROW(neg_cf_expand(4, 2), Error);
  EXPECT_THROW(neg_cf_expand(3, 4), Error);
  EXPECT_THROW(neg_cf_expand(1, 1), Error);
}

TEST(ContinuedFraction, DualExamples) {
  EXPECT_EQ(cf_dual(31, 18), 19);
  EXPECT_EQ(cf_dual(145, 128), 17);
  EXPECT_EQ(cf_dual(31, 6), 26);
  EXPECT_EQ(cf_dual(1, 0), 0);
}

TEST(ContinuedFractionProperty, RoundTripAgainstOracle) {
  for (long long a = 2; a <= 200; ++a)
    for (long long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto terms = neg_cf_expand(a, b);
      std::vector<long long> small;
      for (auto& t : terms) {
        ASSERT_GE(t, 2);
        small.push_back(static_cast<long long>(t));
      }
      auto [p, q] = eval_oracle(small);
      ASSERT_EQ(p, a);
      ASSERT_EQ(q, b);
      ASSERT_EQ(neg_cf_eval(terms), Rational(Integer(a), Integer(b)));
    }
}

TEST(ContinuedFractionProperty, DualMatchesScanAndIsInvolution) {
  for (long long a = 1; a <= 200; ++a)
    for (long long b = 0; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      long long scan = 0;
      while ((b * scan) % a != 1 % a) ++scan;
      ASSERT_EQ(cf_dual(a, b), scan) << a << "," << b;
      ASSERT_EQ(cf_dual(a, cf_dual(a, b)), b);
    }
}
