#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace suslink;
using suslink::testing::example;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

PlumbingTree single(long long w) {
  PlumbingTree t;
  t.vertices.push_back({1, w, 0, std::nullopt, ""});
  return t;
}

PlumbingTree final_tree(int k) { return *suslink::testing::run(example(k), suslink::testing::example_r(k)).tree; }

// Negative definiteness by exact LDL^T on -A, independent of the Bareiss code.
bool definite_oracle(const IntMatrix& a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -Rational(a(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= Rational(0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

std::vector<Rational> adjunction_rhs(const PlumbingTree& t) {
  std::vector<Rational> d;
  for (auto& v : t.vertices) d.emplace_back(Integer(-v.weight - 2 + 2 * v.genus));
  return d;
}

}  // namespace

TEST(CanonicalClass, SingleVertex) {
  auto t = single(-2);
  auto k = canonical_class(t);
  EXPECT_EQ(k, std::vector<Rational>{q(0)});
  EXPECT_TRUE(is_num_gorenstein(k));
  EXPECT_EQ(k_squared(t, k), q(0));
  EXPECT_EQ(chi_resolution(t), 2);
}

TEST(CanonicalClass, ExampleOneIsNotGorenstein) {
  auto t = final_tree(1);
  auto k = canonical_class(t);
  EXPECT_FALSE(is_num_gorenstein(k));
  EXPECT_EQ(chi_resolution(t), 14);
}

// Frozen from the exact solve; the oracle re-checks A K = d and K.d.
TEST(CanonicalClass, ExampleThree) {
  auto t = final_tree(3);
  auto k = canonical_class(t);
  EXPECT_EQ(multiply(intersection_matrix(t), k), adjunction_rhs(t));
  EXPECT_FALSE(is_num_gorenstein(k));
  Rational kd;
  auto d = adjunction_rhs(t);
  for (std::size_t i = 0; i < k.size(); ++i) kd += k[i] * d[i];
  EXPECT_EQ(k_squared(t, k), kd);
  EXPECT_EQ(k_squared(t, k), q(-209, 5));
  EXPECT_EQ(chi_resolution(t), 18);
  EXPECT_FALSE(laufer_steenbrink(t, 45).applicable);
}

TEST(CanonicalClassProperty, AdjunctionHoldsOnAllTrees) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 6; ++r) {
      auto t = *suslink::testing::run(example(k), r).tree;
      auto K = canonical_class(t);
      EXPECT_EQ(multiply(intersection_matrix(t), K), adjunction_rhs(t));
    }
}

TEST(CanonicalClassProperty, BlowDownKeepsKSquaredPlusVertexCount) {
  auto t = *suslink::testing::run(example(2), 2).tree;
  auto k2 = [](const PlumbingTree& x) { return k_squared(x, canonical_class(x)) + Rational(Integer(x.vertices.size())); };
  Rational before = k2(t);
  // Blow down one vertex at a time to check every intermediate step.
  PlumbingTree cur = t;
  for (int step = 0; step < 2; ++step) {
    PlumbingTree one = cur;
    int target = 0;
    for (auto& v : one.vertices)
      if (v.weight == -1) target = v.id;
    ASSERT_NE(target, 0);
    auto nb = one.neighbours(target);
    ASSERT_EQ(nb.size(), 2u);
    for (int u : nb) one.vertex(u).weight += 1;
    std::vector<PlumbingEdge> kept;
    for (auto& e : one.edges)
      if (e.u != target && e.v != target) kept.push_back(e);
    kept.push_back({nb[0], nb[1], 1});
    one.edges = kept;
    one.vertices.erase(one.vertices.begin() + static_cast<long>(one.index_of(target)));
    EXPECT_EQ(k2(one), before);
    EXPECT_EQ(suslink::abs(determinant(one)), suslink::abs(determinant(cur)));
    cur = one;
  }
  EXPECT_TRUE(isomorphic(cur, blow_down(t)));
}

TEST(FibreEuler, Examples) {
  EXPECT_EQ(fibre_euler(subtract_and_normalize(example(3))), (FibreEuler{-10, 5, 2}));
  EXPECT_EQ(fibre_euler(subtract_and_normalize(example(2))), (FibreEuler{-2, 1, 2}));
  EXPECT_EQ(fibre_euler(subtract_and_normalize(example(2), InputSide::sum)), (FibreEuler{-10, 5, 2}));
  EXPECT_EQ(fibre_euler(subtract_and_normalize(suslink::testing::cusp(), InputSide::f)), (FibreEuler{-1, 1, 1}));
}

TEST(FibreEulerProperty, OrientationFlipInvariant) {
  for (int k : {1, 2, 3}) {
    auto mp = subtract_and_normalize(example(k));
    auto flipped = mp;
    for (auto& v : flipped.vertices) v.flipped = !v.flipped;
    EXPECT_EQ(fibre_euler(mp), fibre_euler(flipped));
  }
}

TEST(Join, Examples) {
  EXPECT_EQ(join_euler(-10, 3), 23);
  EXPECT_EQ(join_euler(-2, 2), 4);
  for (long long r = 1; r <= 9; ++r) EXPECT_EQ(join_euler(1, r), 1);
}

TEST(JoinProperty, MatchesJoinOracle) {
  for (long long chi = -50; chi <= 2; ++chi)
    for (long long r = 2; r <= 9; ++r) {
      long long oracle = chi + r - chi * r;
      EXPECT_EQ(join_euler(chi, r), oracle);
      EXPECT_EQ(join_wedge_count(chi, r), oracle - 1);
    }
}

TEST(LauferSteenbrink, Congruence) {
  auto t = single(-2);
  auto yes = laufer_steenbrink(t, 14);
  EXPECT_TRUE(yes.applicable);
  EXPECT_TRUE(yes.congruent);
  EXPECT_EQ(yes.left, 2);
  EXPECT_EQ(yes.right, 2);
  auto no = laufer_steenbrink(t, 23);
  EXPECT_FALSE(no.congruent);
  EXPECT_EQ(no.left, 11);
  EXPECT_FALSE(laufer_steenbrink(final_tree(1), 19).applicable);
}

TEST(LauferSteenbrink, ResiduesReduceIntoRange) {
  EXPECT_EQ(canonical_class(single(-4)), std::vector<Rational>{q(-1, 2)});
  EXPECT_FALSE(laufer_steenbrink(single(-5), 0).applicable);
  PlumbingTree t;
  t.vertices.push_back({1, -1, 2, std::nullopt, ""});
  EXPECT_EQ(canonical_class(t), std::vector<Rational>{q(-3)});
  auto ls = laufer_steenbrink(t, -13);
  ASSERT_TRUE(ls.applicable);
  EXPECT_EQ(ls.chi_plus_k2, -11);
  EXPECT_EQ(ls.right, 1);
  EXPECT_EQ(ls.left, 11);
  EXPECT_FALSE(ls.congruent);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(single(-2)), -2);
  EXPECT_TRUE(negative_definite(single(-2)));
  auto t3 = final_tree(3);
  EXPECT_TRUE(negative_definite(t3));
  EXPECT_TRUE(definite_oracle(intersection_matrix(t3)));
}

TEST(DeterminantProperty, DefinitenessAgreesWithOracle) {
  for (int k : {1, 2, 3})
    for (long long r = 1; r <= 6; ++r) {
      auto t = *suslink::testing::run(example(k), r).tree;
      EXPECT_EQ(negative_definite(t), definite_oracle(intersection_matrix(t)));
    }
}

TEST(ObstructionReport, ExampleTwo) {
  auto b = suslink::testing::run(example(2), 2);
  const auto& rep = *b.report;
  EXPECT_EQ(rep.chi_fibre_fg, -2);
  EXPECT_EQ(rep.fibre_genus, 1);
  EXPECT_EQ(rep.chi_fibre_F, 4);
  EXPECT_EQ(rep.wedge_count, 3);
  EXPECT_EQ(rep.chi_resolution, 4);
  EXPECT_EQ(rep.determinant, 5);
}
