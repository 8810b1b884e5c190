#include "suslink/invariants.hpp"

#include "suslink/error.hpp"

#include <algorithm>

namespace suslink {

namespace {

std::vector<Rational> adjunction_rhs(const PlumbingTree& tree) {
  std::vector<Rational> d;
  for (const auto& v : tree.vertices) d.emplace_back(Integer(-v.weight - 2 + 2 * v.genus));
  return d;
}

}  // namespace

std::vector<Rational> canonical_class(const PlumbingTree& tree) {
  if (tree.vertices.empty()) throw Error(Stage::invariants, "empty plumbing graph");
  IntMatrix a = intersection_matrix(tree);
  auto d = adjunction_rhs(tree);
  auto k = solve_exact(a, d);
  if (!k) throw Error(Stage::invariants, "singular intersection matrix");
  if (multiply(a, *k) != d) throw Error(Stage::invariants, "adjunction residual is not zero");
  return *k;
}

bool is_num_gorenstein(const std::vector<Rational>& k) {
  return std::all_of(k.begin(), k.end(), [](const Rational& x) { return x.is_integer(); });
}

Rational k_squared(const PlumbingTree& tree, const std::vector<Rational>& k) {
  IntMatrix a = intersection_matrix(tree);
  auto ak = multiply(a, k);
  Rational q, cross;
  auto d = adjunction_rhs(tree);
  for (std::size_t i = 0; i < k.size(); ++i) {
    q += k[i] * ak[i];
    cross += k[i] * d[i];
  }
  if (q != cross) throw Error(Stage::invariants, "K^T A K disagrees with K.d");
  return q;
}

Integer chi_resolution(const PlumbingTree& tree) {
  Integer chi = 0;
  for (const auto& v : tree.vertices) chi += 2 - 2 * v.genus;
  return chi - static_cast<long long>(tree.edges.size());
}

FibreEuler fibre_euler(const MultPlumbing& mp) {
  FibreEuler f;
  for (const auto& v : mp.vertices) {
    Integer d = static_cast<long long>(mp.edge_valence(v.id) + mp.arrow_count(v.id));
    f.chi += abs(v.m) * (2 - 2 * v.genus - d);
  }
  for (const auto& a : mp.arrows) f.boundary += abs(a.mult);
  Integer twice = 2 - f.chi - f.boundary;
  if (twice % 2 != 0 || twice < 0) throw Error(Stage::invariants, "disconnected fibre suspected: genus parity fails");
  f.genus = twice / 2;
  return f;
}

Integer join_wedge_count(const Integer& chi_fibre, const Integer& r) { return (r - 1) * (1 - chi_fibre); }

Integer join_euler(const Integer& chi_fibre, const Integer& r) { return 1 + join_wedge_count(chi_fibre, r); }

LauferSteenbrink laufer_steenbrink(const PlumbingTree& tree, const Integer& chi_fibre_f) {
  LauferSteenbrink ls;
  auto k = canonical_class(tree);
  ls.left = mod(chi_fibre_f, 12);
  if (!is_num_gorenstein(k)) return ls;
  Rational k2 = k_squared(tree, k);
  ls.applicable = true;
  ls.chi_plus_k2 = chi_resolution(tree) + k2.num();
  ls.right = mod(ls.chi_plus_k2, 12);
  ls.congruent = ls.left == ls.right;
  return ls;
}

Integer determinant(const PlumbingTree& tree) { return determinant(intersection_matrix(tree)); }

bool negative_definite(const PlumbingTree& tree) { return is_negative_definite(intersection_matrix(tree)); }

ObstructionReport obstruction_report(const PlumbingTree& tree, const MultPlumbing& mp, const Integer& r) {
  ObstructionReport rep;
  rep.K = canonical_class(tree);
  rep.K_squared = k_squared(tree, rep.K);
  rep.numerically_gorenstein = is_num_gorenstein(rep.K);
  rep.chi_resolution = chi_resolution(tree);
  auto fibre = fibre_euler(mp);
  rep.chi_fibre_fg = fibre.chi;
  rep.fibre_genus = fibre.genus;
  rep.fibre_boundary = fibre.boundary;
  rep.chi_fibre_F = join_euler(fibre.chi, r);
  rep.wedge_count = join_wedge_count(fibre.chi, r);
  rep.ls = laufer_steenbrink(tree, rep.chi_fibre_F);
  rep.negative_definite = negative_definite(tree);
  rep.determinant = determinant(tree);
  return rep;
}

}  // namespace suslink
