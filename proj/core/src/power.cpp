#include "suslink/power.hpp"

#include "suslink/error.hpp"

namespace suslink {

namespace {

Integer gcd_r(const Integer& a, const Integer& r) { return a == 0 ? r : gcd(a, r); }

// Orbit count n_i of the incidence under h^r.
Integer lift_count(const Valency& v, const Integer& order, const Integer& r) {
  return gcd_r(order / v.lambda, r);
}

}  // namespace

Valency power_valency(const Valency& v, const Integer& order, const Integer& r) {
  if (order % v.lambda != 0) throw Error(Stage::power, "lambda " + v.lambda.str() + " does not divide order " + order.str());
  Integer n = gcd_r(order, r);
  Integer ni = lift_count(v, order, r);
  if ((v.lambda * ni) % n != 0) throw Error(Stage::power, "non-integral lambda^(r)");
  Integer lambda = v.lambda * ni / n;
  Integer rr = r / n;
  auto inv = mod_inverse(rr, lambda);
  if (!inv) throw Error(Stage::power, "r/n not invertible modulo lambda^(r)");
  return make_valency(lambda, v.sigma * *inv);
}

NielsenGraph power_nielsen(const NielsenGraph& src, const Integer& r) {
  if (r < 1) throw Error(Stage::power, "r must be positive");
  for (const auto& v : src.vertices)
    if (v.q != 1) throw Error(Stage::power, "vertex with q != 1 unsupported", {v.id});
  if (r == 1) return src;

  NielsenGraph out;
  out.notes = src.notes;
  std::vector<Integer> defect(src.vertices.size(), 0);  // sum of (n - n_i)
  auto order_of = [&](int id) { return src.vertex(id).order; };
  auto audit = [&](int id, const char* what, const Valency& v, const Valency& p) {
    Integer m = order_of(id);
    Integer printed = m / (v.lambda * lift_count(v, m, r));
    if (printed != p.lambda)
      out.notes.push_back("vertex " + std::to_string(id) + " " + what + " " + valency_label(v) + ": lambda^(r) = " +
                          p.lambda.str() + " (formula m/(lambda n_i) would give " + printed.str() + ")");
  };
  auto account = [&](int id, const Valency& v) {
    Integer m = order_of(id);
    Integer ni = lift_count(v, m, r);
    defect[src.index_of(id)] += gcd_r(m, r) - ni;
    return ni;
  };

  for (const auto& s : src.stalks) {
    Integer ni = account(s.vertex, s.valency);
    Valency p = power_valency(s.valency, order_of(s.vertex), r);
    audit(s.vertex, "stalk", s.valency, p);
    if (p.lambda == 1) continue;
    for (Integer k = 0; k < ni; ++k) out.stalks.push_back({s.vertex, p});
  }
  for (const auto& b : src.boundaries) {
    Integer ni = account(b.vertex, b.valency);
    Valency p = power_valency(b.valency, order_of(b.vertex), r);
    audit(b.vertex, "boundary-stalk", b.valency, p);
    for (Integer k = 0; k < ni; ++k) out.boundaries.push_back({b.vertex, p, b.twist * Rational(r)});
  }
  for (const auto& e : src.edges) {
    Integer nu = account(e.u, e.at_u);
    Integer nv = account(e.v, e.at_v);
    if (nu != nv) throw Error(Stage::power, "edge lifts differently at its two ends", {e.u, e.v});
    Valency pu = power_valency(e.at_u, order_of(e.u), r);
    Valency pv = power_valency(e.at_v, order_of(e.v), r);
    audit(e.u, "edge end", e.at_u, pu);
    audit(e.v, "edge end", e.at_v, pv);
    for (Integer k = 0; k < nu; ++k) out.edges.push_back({e.u, e.v, e.twist * Rational(r), pu, pv});
  }

  for (std::size_t i = 0; i < src.vertices.size(); ++i) {
    const auto& v = src.vertices[i];
    Integer n = gcd_r(v.order, r);
    if (defect[i] % 2 != 0) throw Error(Stage::power, "fractional genus", {v.id});
    Integer genus = n * (v.genus - 1) + 1 + defect[i] / 2;
    if (genus < 0) throw Error(Stage::power, "negative genus", {v.id});
    out.vertices.push_back({v.id, v.order / n, genus, 1, v.origin});
  }
  return out;
}

}  // namespace suslink
