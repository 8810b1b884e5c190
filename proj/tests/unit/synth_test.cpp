#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace suslink;
using suslink::testing::example;
using suslink::testing::ints;

namespace {

// Builds a tree from node weights and chains. Each chain is (from, to, weights);
// to = -1 marks a free end.
struct Builder {
  PlumbingTree t;
  int add(long long w) {
    int id = static_cast<int>(t.vertices.size()) + 1;
    t.vertices.push_back({id, w, 0, std::nullopt, ""});
    return id;
  }
  void chain(int from, int to, std::initializer_list<long long> ws) {
    int prev = from;
    for (auto w : ws) {
      int v = add(w);
      t.edges.push_back({prev, v, 1});
      prev = v;
    }
    if (to > 0) t.edges.push_back({prev, to, 1});
  }
};

PlumbingTree synthesized(int k, long long r, bool keep_arrows = false) {
  auto n = power_nielsen(build_nielsen(subtract_and_normalize(example(k))), r);
  return synth_plumbing(mero_waldhausen(n), keep_arrows);
}

}  // namespace

TEST(ChainMults, Examples) {
  EXPECT_EQ(chain_mults(ints({-2}), 2, LeafEnd{}), ints({1}));
  EXPECT_EQ(chain_mults(ints({-2, -2, -2, -2, -7}), 10, NodeEnd{-2}), ints({8, 6, 4, 2, 0}));
  EXPECT_EQ(chain_mults(ints({-5}), 9, ArrowEnd{1}), ints({2}));
  EXPECT_THROW(chain_mults(ints({-2}), 3, LeafEnd{}), Error);
}

TEST(Synth, ExampleOne) {
  auto t = synthesized(1, 3);
  Builder b;
  int a = b.add(-2), c = b.add(-2);
  b.chain(a, -1, {-2, -2});
  b.chain(a, -1, {-2});
  b.chain(a, c, {-2, -2, -2, -2, -7});
  for (int i = 0; i < 3; ++i) b.chain(c, -1, {-2});
  EXPECT_EQ(t.vertices.size(), 13u);
  EXPECT_TRUE(isomorphic(t, b.t));
  std::vector<Integer> chain;
  for (auto& v : t.vertices)
    if (v.origin.rfind("edge", 0) == 0) chain.push_back(*v.mult);
  EXPECT_EQ(chain, ints({8, 6, 4, 2, 0}));
}

TEST(Synth, ExampleTwo) {
  auto t = synthesized(2, 2);
  Builder b;
  int a = b.add(-1), c = b.add(-1);
  b.chain(a, c, {-5});
  b.chain(a, c, {-5});
  EXPECT_TRUE(isomorphic(t, b.t));
}

TEST(Synth, ExampleThree) {
  auto t = synthesized(3, 5);
  Builder b;
  int a = b.add(-1), c = b.add(-2);
  b.chain(a, -1, {-2, -2});
  b.chain(a, -1, {-5});
  b.chain(a, c, {-9, -3, -2, -2, -2, -2, -2, -2, -2});
  b.chain(c, -1, {-2});
  b.chain(c, -1, {-2, -3});
  EXPECT_EQ(t.vertices.size(), 17u);
  EXPECT_TRUE(isomorphic(t, b.t));
}

TEST(Synth, HolomorphicCuspGivesE8) {
  auto n = power_nielsen(build_nielsen(subtract_and_normalize(suslink::testing::cusp(), InputSide::f)), 5);
  auto t = blow_down(synth_plumbing(mero_waldhausen(n)));
  Builder b;
  int c = b.add(-2);
  b.chain(c, -1, {-2});
  b.chain(c, -1, {-2, -2});
  b.chain(c, -1, {-2, -2, -2, -2});
  EXPECT_TRUE(isomorphic(t, b.t));
}

TEST(BlowDown, ExampleTwo) {
  auto t = synthesized(2, 2);
  auto d = blow_down(t);
  Builder b;
  int x = b.add(-3), y = b.add(-3);
  b.t.edges.push_back({x, y, 1});
  b.t.edges.push_back({x, y, 1});
  EXPECT_TRUE(isomorphic(d, b.t));
  EXPECT_EQ(suslink::abs(determinant(intersection_matrix(d))), suslink::abs(determinant(intersection_matrix(t))));
}

TEST(BlowDown, NoMinusOneIsIdentity) {
  auto t = synthesized(1, 3);
  auto d = blow_down(t);
  EXPECT_EQ(d.vertices, t.vertices);
  EXPECT_EQ(d.edges, t.edges);
}

TEST(BlowDown, LoneVertexKept) {
  Builder b;
  b.add(-1);
  auto d = blow_down(b.t);
  EXPECT_EQ(d.vertices.size(), 1u);
  EXPECT_EQ(d.vertices[0].weight, -1);
}

TEST(BlowDown, ChainCollapsesToPoint) {
  // [-1, -2] blows down to a single -1 vertex: both are S^3.
  Builder b;
  int x = b.add(-2);
  b.chain(x, -1, {-1});
  auto d = blow_down(b.t);
  ASSERT_EQ(d.vertices.size(), 1u);
  EXPECT_EQ(d.vertices[0].weight, -1);
}

TEST(NormalizeSigns, FlipsAcrossNegativeEdges) {
  auto tree = to_plumbing_tree(subtract_and_normalize(example(1)));
  EXPECT_TRUE(monodromical_violations(tree).empty());
  auto n = normalize_edge_signs(tree);
  for (auto& e : n.edges) EXPECT_EQ(e.sign, 1);
  EXPECT_TRUE(monodromical_violations(n).empty());
  std::vector<Integer> m;
  for (auto& v : n.vertices) m.push_back(*v.mult);
  EXPECT_EQ(m, ints({5, 10, 4, 2, 0, -2, -6, -3}));
  for (std::size_t i = 0; i < n.vertices.size(); ++i) EXPECT_EQ(n.vertices[i].weight, tree.vertices[i].weight);
}

TEST(NormalizeSigns, IdentityOnPositiveTree) {
  auto t = synthesized(1, 3);
  EXPECT_EQ(normalize_edge_signs(t), t);
}

TEST(NormalizeSigns, RejectsDoubleEdge) {
  auto d = blow_down(synthesized(2, 2));
  try {
    normalize_edge_signs(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("not a tree: sign normalization skipped"));
  }
}

TEST(SynthProperty, MonodromicalSystemHolds) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 7; ++r) {
      auto t = synthesized(k, r, true);
      ASSERT_TRUE(t.has_multiplicities());
      EXPECT_TRUE(monodromical_violations(t).empty()) << "ex" << k << " r=" << r;
      for (auto& e : t.edges) EXPECT_EQ(e.sign, 1);
      auto bare = synthesized(k, r, false);
      EXPECT_TRUE(bare.arrows.empty());
      EXPECT_EQ(bare.vertices, t.vertices);
    }
}

TEST(SynthProperty, BoundaryIsPreservedByBlowDown) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 7; ++r) {
      auto t = synthesized(k, r);
      auto d = blow_down(t);
      EXPECT_EQ(suslink::abs(determinant(intersection_matrix(t))), suslink::abs(determinant(intersection_matrix(d))));
    }
}
