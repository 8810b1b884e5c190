#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

using namespace suslink;
using suslink::testing::example;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

NielsenGraph nielsen_of(int k) { return build_nielsen(subtract_and_normalize(example(k))); }

std::multiset<std::pair<int, Valency>> stalks(const NielsenGraph& n) {
  std::multiset<std::pair<int, Valency>> s;
  for (auto& x : n.stalks) s.insert({x.vertex, x.valency});
  return s;
}

}  // namespace

TEST(Power, ExampleOneCube) {
  auto p = power_nielsen(nielsen_of(1), 3);
  EXPECT_EQ(p.vertex(2).order, 10);
  EXPECT_EQ(p.vertex(7).order, 2);
  std::multiset<std::pair<int, Valency>> expected = {
      {2, make_valency(2, 1)}, {7, make_valency(2, 1)}, {7, make_valency(2, 1)}, {7, make_valency(2, 1)}};
  EXPECT_EQ(stalks(p), expected);
  for (auto& b : p.boundaries) {
    if (b.vertex == 2) {
      EXPECT_EQ(b.valency, make_valency(10, 3));
      EXPECT_EQ(b.twist, q(-3, 10));
    } else {
      EXPECT_EQ(b.valency, make_valency(2, -1));
      EXPECT_EQ(b.twist, q(-1, 2));
    }
  }
  ASSERT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges[0].twist, q(31, 10));
  EXPECT_EQ(p.edges[0].at_u, make_valency(5, 1));
  EXPECT_EQ(p.edges[0].at_v, make_valency(1, 1));
}

TEST(Power, ExampleTwoSquare) {
  auto p = power_nielsen(nielsen_of(2), 2);
  EXPECT_EQ(p.vertex(2).order, 1);
  EXPECT_EQ(p.vertex(4).order, 1);
  EXPECT_TRUE(p.stalks.empty());
  ASSERT_EQ(p.boundaries.size(), 2u);
  for (auto& b : p.boundaries) {
    EXPECT_EQ(b.valency, make_valency(1, -1));
    EXPECT_EQ(b.twist, q(-1));
  }
  ASSERT_EQ(p.edges.size(), 2u);
  for (auto& e : p.edges) EXPECT_EQ(e.twist, q(5));
}

TEST(Power, ExampleThreeFifth) {
  auto p = power_nielsen(nielsen_of(3), 5);
  EXPECT_EQ(p.vertex(2).order, 9);
  EXPECT_EQ(p.vertex(7).order, 8);
  std::multiset<std::pair<int, Valency>> expected = {{2, make_valency(3, 1)}, {7, make_valency(2, 1)}};
  EXPECT_EQ(stalks(p), expected);
  for (auto& b : p.boundaries) {
    EXPECT_EQ(b.valency, b.vertex == 2 ? make_valency(9, 7) : make_valency(8, 3));
    EXPECT_EQ(b.twist, b.vertex == 2 ? q(-5, 9) : q(-5, 8));
  }
  ASSERT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges[0].at_u, make_valency(9, 8));
  EXPECT_EQ(p.edges[0].at_v, make_valency(8, 1));
  EXPECT_EQ(p.edges[0].twist, q(145, 72));
}

TEST(Power, ValencyFormula) {
  EXPECT_EQ(power_valency(make_valency(5, -2), 10, 3), make_valency(5, 1));
  EXPECT_EQ(power_valency(make_valency(3, 2), 6, 3), make_valency(1, 0));
  EXPECT_EQ(power_valency(make_valency(9, -5), 9, 5), make_valency(9, 8));
}

TEST(PowerProperty, IdentityAtOne) {
  for (int k : {1, 2, 3}) {
    auto n = nielsen_of(k);
    EXPECT_EQ(power_nielsen(n, 1), n);
  }
}

TEST(PowerProperty, TwistLinearity) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 9; ++r) {
      auto n = nielsen_of(k);
      auto p = power_nielsen(n, r);
      std::map<int, Rational> bt;
      for (auto& b : n.boundaries) bt[b.vertex] = b.twist;
      for (auto& b : p.boundaries) EXPECT_EQ(b.twist, Rational(r) * bt.at(b.vertex));
      for (auto& e : p.edges) {
        bool found = false;
        for (auto& o : n.edges)
          if (std::minmax(o.u, o.v) == std::minmax(e.u, e.v)) {
            EXPECT_EQ(e.twist, Rational(r) * o.twist);
            found = true;
          }
        EXPECT_TRUE(found);
      }
    }
}

TEST(PowerProperty, Composition) {
  for (int k : {1, 2, 3})
    for (long long a = 1; a <= 6; ++a)
      for (long long b = 1; b <= 6; ++b) {
        auto n = nielsen_of(k);
        EXPECT_TRUE(isomorphic(power_nielsen(power_nielsen(n, a), b), power_nielsen(n, a * b)))
            << "ex" << k << " a=" << a << " b=" << b;
      }
}

TEST(PowerProperty, GenusIsRiemannHurwitz) {
  // Euler characteristic of the n-fold cover of the orbit surface, with
  // boundary circles counted through their lifts: n(2 - 2g) - sum (n - n_i) = 2 - 2g'.
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 12; ++r) {
      auto n = nielsen_of(k);
      auto p = power_nielsen(n, r);
      for (auto& v : n.vertices) {
        Integer c = suslink::gcd(v.order, Integer(r));
        Integer branch = 0;
        auto add = [&](const Valency& val) { branch += c - suslink::gcd(v.order / val.lambda, Integer(r)); };
        for (auto& s : n.stalks)
          if (s.vertex == v.id) add(s.valency);
        for (auto& b : n.boundaries)
          if (b.vertex == v.id) add(b.valency);
        for (auto& e : n.edges) {
          if (e.u == v.id) add(e.at_u);
          if (e.v == v.id) add(e.at_v);
        }
        Integer chi = c * (2 - 2 * v.genus) - branch;
        EXPECT_EQ(2 - 2 * p.vertex(v.id).genus, chi);
      }
    }
}
