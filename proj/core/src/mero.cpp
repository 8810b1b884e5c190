#include "suslink/mero.hpp"

#include "suslink/error.hpp"

namespace suslink {

namespace {

struct Normalized {
  Integer beta;
  Integer sigma;
};

// beta(sigma) = c0 + c1 * sigma with c1 * lambda = alpha > 0, so moving sigma
// by lambda moves beta by alpha and exactly one representative lands in [0, alpha).
Normalized normalize(const Rational& c0, const Rational& c1, const Integer& sigma0, const Integer& lambda,
                     const Integer& alpha, int id) {
  Rational beta0 = c0 + c1 * Rational(sigma0);
  if (!beta0.is_integer()) throw Error(Stage::waldhausen, "mero normalization failure: no integral beta", {id});
  if (c1 * Rational(lambda) != Rational(alpha)) throw Error(Stage::waldhausen, "mero normalization failure: step mismatch", {id});
  Integer k = -floor_div(beta0.num(), alpha);
  return {beta0.num() + k * alpha, sigma0 + k * lambda};
}

Integer integral_alpha(const Rational& a, int id) {
  if (!a.is_integer() || a.num() < 1) throw Error(Stage::waldhausen, "mero normalization failure: alpha " + a.str() + " not a positive integer", {id});
  return a.num();
}

}  // namespace

WaldhausenGraph mero_waldhausen(const NielsenGraph& n) {
  WaldhausenGraph w;
  w.notes = n.notes;
  std::vector<Rational> e(n.vertices.size());
  for (const auto& v : n.vertices) {
    if (v.q != 1) throw Error(Stage::waldhausen, "vertex with q != 1 unsupported", {v.id});
    w.vertices.push_back({v.id, 0, v.genus, v.q, v.order, v.origin});
  }

  for (const auto& s : n.stalks) {
    if (s.valency.lambda == 1) continue;
    if (s.valency.sigma == 0) throw Error(Stage::waldhausen, "stalk with sigma = 0 mod lambda > 1", {s.vertex});
    w.stalks.push_back({s.vertex, {s.valency.lambda, s.valency.sigma}});
    e[n.index_of(s.vertex)] += Rational(s.valency.sigma, s.valency.lambda);
  }

  for (const auto& b : n.boundaries) {
    if (b.twist.sign() == 0) throw Error(Stage::waldhausen, "boundary-stalk with zero twist", {b.vertex});
    const Integer& m = n.vertex(b.vertex).order;
    const Integer& lambda = b.valency.lambda;
    Rational sg(b.twist.sign());
    Integer alpha = integral_alpha((b.twist * Rational(lambda)).abs(), b.vertex);
    // beta = -s (1 - m t sigma) / m
    Rational c0 = -sg / Rational(m);
    Rational c1 = sg * b.twist;
    auto nb = normalize(c0, c1, b.valency.sigma, lambda, alpha, b.vertex);
    w.arrows.push_back({b.vertex, {alpha, nb.beta}});
    e[n.index_of(b.vertex)] += Rational(nb.sigma, lambda);
  }

  for (const auto& ed : n.edges) {
    if (ed.twist.sign() == 0) throw Error(Stage::waldhausen, "edge with zero twist", {ed.u, ed.v});
    const Integer& mu = n.vertex(ed.u).order;
    const Integer& mv = n.vertex(ed.v).order;
    Rational sg(ed.twist.sign());
    Integer alpha = integral_alpha((Rational(mv) * ed.twist * Rational(ed.at_u.lambda)).abs(), ed.u);
    Integer alpha_v = integral_alpha((Rational(mu) * ed.twist * Rational(ed.at_v.lambda)).abs(), ed.v);
    if (alpha != alpha_v) throw Error(Stage::waldhausen, "edge alpha differs at its two ends", {ed.u, ed.v});
    // beta = -s (m' - m m' t sigma) / m at each end
    auto end = [&](const Integer& m, const Integer& mp, const Valency& val, int id) {
      Rational c0 = -sg * Rational(mp) / Rational(m);
      Rational c1 = sg * Rational(mp) * ed.twist;
      return normalize(c0, c1, val.sigma, val.lambda, alpha, id);
    };
    auto bu = end(mu, mv, ed.at_u, ed.u);
    auto bv = end(mv, mu, ed.at_v, ed.v);
    if (alpha == 1) {
      if (bu.beta != 0 || bv.beta != 0) throw Error(Stage::waldhausen, "alpha = 1 edge with nonzero beta", {ed.u, ed.v});
    } else if (mod(bu.beta * bv.beta, alpha) != 1) {
      throw Error(Stage::waldhausen, "edge betas are not dual modulo alpha", {ed.u, ed.v});
    }
    w.edges.push_back({ed.u, ed.v, -ed.twist.sign(), alpha, bu.beta, bv.beta});
    e[n.index_of(ed.u)] += Rational(bu.sigma, ed.at_u.lambda);
    e[n.index_of(ed.v)] += Rational(bv.sigma, ed.at_v.lambda);
  }

  std::vector<int> bad;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].is_integer()) bad.push_back(n.vertices[i].id);
    else w.vertices[i].e = e[i].num();
  }
  if (!bad.empty()) throw Error(Stage::waldhausen, "Euler obstruction failure: non-integral e", bad);
  return w;
}

}  // namespace suslink
