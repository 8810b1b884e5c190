#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace suslink;
using suslink::testing::example;

namespace {

WaldhausenGraph waldhausen_of(int k, long long r) {
  return mero_waldhausen(power_nielsen(build_nielsen(subtract_and_normalize(example(k))), r));
}

std::multiset<std::pair<long long, long long>> pairs(const std::vector<WaldhausenStalk>& s, int v) {
  std::multiset<std::pair<long long, long long>> out;
  for (auto& x : s)
    if (x.vertex == v) out.insert({static_cast<long long>(x.pair.alpha), static_cast<long long>(x.pair.beta)});
  return out;
}

std::multiset<std::pair<long long, long long>> pairs(const std::vector<WaldhausenArrow>& s, int v) {
  std::multiset<std::pair<long long, long long>> out;
  for (auto& x : s)
    if (x.vertex == v) out.insert({static_cast<long long>(x.pair.alpha), static_cast<long long>(x.pair.beta)});
  return out;
}

using Pairs = std::multiset<std::pair<long long, long long>>;

}  // namespace

TEST(Mero, ExampleOne) {
  auto w = waldhausen_of(1, 3);
  EXPECT_EQ(w.vertex(2).e, 1);
  EXPECT_EQ(w.vertex(7).e, 2);
  EXPECT_EQ(pairs(w.stalks, 2), (Pairs{{2, 1}}));
  EXPECT_EQ(pairs(w.stalks, 7), (Pairs{{2, 1}, {2, 1}, {2, 1}}));
  EXPECT_EQ(pairs(w.arrows, 2), (Pairs{{3, 1}}));
  EXPECT_EQ(pairs(w.arrows, 7), (Pairs{{1, 0}}));
  ASSERT_EQ(w.edges.size(), 1u);
  EXPECT_EQ(w.edges[0].sign, -1);
  EXPECT_EQ(w.edges[0].alpha, 31);
  EXPECT_EQ(w.edges[0].beta, 6);
  EXPECT_EQ(w.edges[0].beta_dual, 26);
}

TEST(Mero, ExampleTwo) {
  auto w = waldhausen_of(2, 2);
  for (int v : {2, 4}) {
    EXPECT_EQ(w.vertex(v).e, 1);
    EXPECT_EQ(pairs(w.arrows, v), (Pairs{{1, 0}}));
    EXPECT_TRUE(pairs(w.stalks, v).empty());
  }
  ASSERT_EQ(w.edges.size(), 2u);
  for (auto& e : w.edges) {
    EXPECT_EQ(e.sign, -1);
    EXPECT_EQ(e.alpha, 5);
    EXPECT_EQ(e.beta, 4);
  }
}

TEST(Mero, ExampleThree) {
  auto w = waldhausen_of(3, 5);
  EXPECT_EQ(w.vertex(2).e, 2);
  EXPECT_EQ(w.vertex(7).e, 1);
  EXPECT_EQ(pairs(w.stalks, 2), (Pairs{{3, 1}}));
  EXPECT_EQ(pairs(w.stalks, 7), (Pairs{{2, 1}}));
  EXPECT_EQ(pairs(w.arrows, 2), (Pairs{{5, 4}}));
  EXPECT_EQ(pairs(w.arrows, 7), (Pairs{{5, 2}}));
  ASSERT_EQ(w.edges.size(), 1u);
  EXPECT_EQ(w.edges[0].sign, -1);
  EXPECT_EQ(w.edges[0].alpha, 145);
  EXPECT_EQ(w.edges[0].beta, 128);
  EXPECT_EQ(w.edges[0].beta_dual, 17);
}

TEST(MeroProperty, PairsNormalizedAndEdgesDual) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 8; ++r) {
      auto w = waldhausen_of(k, r);
      auto check = [](const SeifertPair& p) {
        EXPECT_GE(p.alpha, 1);
        EXPECT_GE(p.beta, 0);
        EXPECT_LT(p.beta, p.alpha == 1 ? 1 : p.alpha);
        EXPECT_EQ(suslink::gcd(p.alpha, p.beta), 1);
      };
      for (auto& s : w.stalks) {
        check(s.pair);
        EXPECT_GT(s.pair.alpha, 1);
      }
      for (auto& a : w.arrows) check(a.pair);
      for (auto& e : w.edges) {
        check({e.alpha, e.beta});
        check({e.alpha, e.beta_dual});
        EXPECT_TRUE(e.sign == 1 || e.sign == -1);
        if (e.alpha > 1) EXPECT_EQ(suslink::mod(e.beta * e.beta_dual, e.alpha), 1);
        EXPECT_EQ(e.beta_dual, cf_dual(e.alpha, e.beta));
      }
    }
}
