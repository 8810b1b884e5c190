#include "suslink/nielsen.hpp"

#include "suslink/continued_fraction.hpp"
#include "suslink/error.hpp"

#include <algorithm>
#include <set>

namespace suslink {

namespace {

struct Incident {
  std::size_t edge;
  int other;
};

std::vector<Incident> incident(const MultPlumbing& mp, int id) {
  std::vector<Incident> out;
  for (std::size_t k = 0; k < mp.edges.size(); ++k) {
    const auto& e = mp.edges[k];
    if (e.u == id) out.push_back({k, e.v});
    else if (e.v == id) out.push_back({k, e.u});
  }
  return out;
}

[[noreturn]] void chain_error(const std::string& what, std::vector<int> ids) {
  throw Error(Stage::nielsen, "inconsistent chain data: " + what, std::move(ids));
}

std::vector<Integer> negated_weights(const MultPlumbing& mp, const std::vector<int>& chain) {
  std::vector<Integer> w;
  for (int id : chain) w.push_back(-mp.vertex(id).weight);
  return w;
}

}  // namespace

Decomposition decompose(const MultPlumbing& mp) {
  Decomposition d;
  d.nodes = mp.nodes();
  if (d.nodes.empty()) throw Error(Stage::nielsen, "no node (Seifert or unknot case unsupported)");
  std::set<int> node_set(d.nodes.begin(), d.nodes.end());

  std::vector<int> stray;
  for (const auto& a : mp.arrows) {
    if (!node_set.count(a.vertex)) stray.push_back(a.vertex);
    else d.node_arrows.push_back({a.vertex, a.mult});
  }
  if (!stray.empty()) throw Error(Stage::nielsen, "arrow on non-node vertex", stray);
  std::vector<int> zero_nodes;
  for (int id : d.nodes)
    if (mp.vertex(id).m == 0) zero_nodes.push_back(id);
  if (!zero_nodes.empty()) throw Error(Stage::nielsen, "node with m = 0", zero_nodes);

  std::vector<bool> used(mp.edges.size(), false);
  std::set<int> covered(d.nodes.begin(), d.nodes.end());
  for (int node : d.nodes) {
    for (const auto& start : incident(mp, node)) {
      if (used[start.edge]) continue;
      used[start.edge] = true;
      int sign = mp.edges[start.edge].sign;
      std::vector<int> chain;
      int cur = start.other;
      std::size_t came = start.edge;
      while (!node_set.count(cur)) {
        if (!covered.insert(cur).second) throw Error(Stage::nielsen, "plumbing graph is not a tree", {cur});
        chain.push_back(cur);
        std::optional<Incident> next;
        for (const auto& inc : incident(mp, cur))
          if (inc.edge != came) next = inc;
        if (!next) break;
        used[next->edge] = true;
        sign *= mp.edges[next->edge].sign;
        came = next->edge;
        cur = next->other;
      }
      if (node_set.count(cur)) {
        d.edge_chains.push_back({node, chain, cur, sign});
      } else {
        std::vector<int> zeros;
        for (int id : chain)
          if (mp.vertex(id).m == 0) zeros.push_back(id);
        if (!zeros.empty()) throw Error(Stage::nielsen, "m = 0 inside stalk chain", zeros);
        d.stalk_chains.push_back({node, chain});
      }
    }
  }
  if (covered.size() != mp.vertices.size()) {
    std::vector<int> lost;
    for (const auto& v : mp.vertices)
      if (!covered.count(v.id)) lost.push_back(v.id);
    throw Error(Stage::nielsen, "vertices unreachable from any node", lost);
  }
  return d;
}

NielsenGraph build_nielsen(const MultPlumbing& mp) {
  Decomposition d = decompose(mp);
  NielsenGraph n;
  for (int id : d.nodes) {
    const auto& v = mp.vertex(id);
    n.vertices.push_back({id, v.m, v.genus, 1, "v" + std::to_string(id)});
  }

  // Multiplicity of w seen from the orientation of `from` (they are joined by edge k).
  auto relative = [&](int w, std::size_t k) { return mp.edges[k].sign * mp.vertex(w).m; };
  auto edge_between = [&](int a, int b) {
    for (std::size_t k = 0; k < mp.edges.size(); ++k) {
      const auto& e = mp.edges[k];
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return k;
    }
    throw Error(Stage::nielsen, "missing edge", {a, b});
  };

  for (const auto& s : d.stalk_chains) {
    const Integer& m = mp.vertex(s.node).m;
    Integer sign = 1;
    int prev = s.node;
    for (int id : s.chain) {
      sign *= mp.edges[edge_between(prev, id)].sign;
      prev = id;
    }
    std::vector<int> ids{s.node};
    ids.insert(ids.end(), s.chain.begin(), s.chain.end());
    if (sign != 1) chain_error("orientation changes along a stalk chain", ids);
    Rational value = neg_cf_eval(negated_weights(mp, s.chain));
    if (value <= Rational(1)) chain_error("stalk chain does not evaluate above 1", ids);
    Integer alpha = value.num();
    Integer beta = alpha - value.den();
    Integer adj = relative(s.chain.front(), edge_between(s.node, s.chain.front()));
    Integer g = gcd(m, adj);
    if (alpha != m / g) chain_error("stalk alpha " + alpha.str() + " differs from m/gcd(m, m_adj)", ids);
    if (mod(beta, alpha) != mod(-adj / g, alpha)) chain_error("stalk sigma disagrees with the local rotation", ids);
    n.stalks.push_back({s.node, make_valency(alpha, beta)});
  }

  for (const auto& a : d.node_arrows) {
    if (a.mult != 1 && a.mult != -1) throw Error(Stage::nielsen, "arrow multiplicity other than +-1", {a.node});
    const Integer& m = mp.vertex(a.node).m;
    n.boundaries.push_back({a.node, make_valency(m, -1), Rational(Integer(-1), m)});
  }

  for (const auto& c : d.edge_chains) {
    const Integer& mi = mp.vertex(c.node_i).m;
    const Integer& mj = mp.vertex(c.node_j).m;
    std::vector<int> ids{c.node_i};
    ids.insert(ids.end(), c.chain.begin(), c.chain.end());
    ids.push_back(c.node_j);

    Integer alpha = 1, beta_i = 0, beta_j_chain = 0;
    Integer u_first, u_last;
    if (c.chain.empty()) {
      u_first = c.sign * mj;
      u_last = c.sign * mi;
      n.notes.push_back("empty edge chain between nodes " + std::to_string(c.node_i) + " and " +
                        std::to_string(c.node_j) + " (alpha = 1)");
    } else {
      auto w = negated_weights(mp, c.chain);
      Rational from_i = neg_cf_eval(w);
      std::reverse(w.begin(), w.end());
      Rational from_j = neg_cf_eval(w);
      if (from_i.num() < 1 || from_i.num() != from_j.num()) chain_error("chain determinant is not positive", ids);
      alpha = from_i.num();
      beta_i = mod(alpha - from_i.den(), alpha);
      beta_j_chain = mod(alpha - from_j.den(), alpha);
      u_first = relative(c.chain.front(), edge_between(c.node_i, c.chain.front()));
      u_last = relative(c.chain.back(), edge_between(c.node_j, c.chain.back()));
    }
    Integer beta_j = cf_dual(alpha, beta_i);
    if (beta_j != beta_j_chain) chain_error("reversed chain does not give the dual beta", ids);

    // Number of boundary curves of each piece along this torus: the gcd of
    // consecutive multiplicities, constant along the chain.
    Integer g = gcd(mi, u_first);
    if (g != gcd(mj, u_last)) chain_error("gcd of chain multiplicities differs at the two ends", ids);
    Integer lambda_i = mi / g, lambda_j = mj / g;
    int s = -c.sign;
    Rational t(Integer(s) * g * alpha, mi * mj);

    Integer denom = s * g * alpha;
    Integer num_i = mi * beta_i * s + mj;
    Integer num_j = mj * beta_j * s + mi;
    if (num_i % denom != 0 || num_j % denom != 0) chain_error("non-integral sigma", ids);
    Integer sigma_i = num_i / denom, sigma_j = num_j / denom;
    if (mod(sigma_i, lambda_i) != mod(-u_first / g, lambda_i) || mod(sigma_j, lambda_j) != mod(-u_last / g, lambda_j))
      chain_error("edge sigma disagrees with the local rotation", ids);
    n.edges.push_back({c.node_i, c.node_j, t, make_valency(lambda_i, sigma_i), make_valency(lambda_j, sigma_j)});
  }
  return n;
}

}  // namespace suslink
