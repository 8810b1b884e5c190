#include "suslink/synth.hpp"

#include "suslink/continued_fraction.hpp"
#include "suslink/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace suslink {

std::vector<Integer> chain_mults(const std::vector<Integer>& weights, const Integer& left_mult, const ChainEnd& right) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(Stage::plumbing, "chain_mults: empty chain");
  IntMatrix a(n);
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = weights[i];
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = 1;
  }
  rhs[0] -= Rational(left_mult);
  if (const auto* node = std::get_if<NodeEnd>(&right)) rhs[n - 1] -= Rational(node->mult);
  if (const auto* arrow = std::get_if<ArrowEnd>(&right)) rhs[n - 1] -= Rational(arrow->mult);
  auto x = solve_exact(a, rhs);
  if (!x) throw Error(Stage::plumbing, "singular chain matrix");
  std::vector<Integer> out;
  for (const auto& q : *x) {
    if (!q.is_integer()) throw Error(Stage::plumbing, "monodromical balance failure: non-integral chain multiplicity " + q.str());
    out.push_back(q.num());
  }
  return out;
}

namespace {

std::vector<Integer> chain_weights(const Integer& alpha, const Integer& beta) {
  auto b = neg_cf_expand(alpha, alpha - beta);
  for (auto& x : b) x = -x;
  return b;
}

std::string pair_str(const Integer& a, const Integer& b) { return "(" + a.str() + "," + b.str() + ")"; }

}  // namespace

PlumbingTree synth_plumbing(const WaldhausenGraph& w, bool keep_arrows) {
  if (w.vertices.empty()) throw Error(Stage::plumbing, "empty Waldhausen graph");

  // Node orientations: an edge with epsilon = -1 joins nodes of opposite sign.
  std::map<int, int> sign;
  for (const auto& root : w.vertices) {
    if (sign.count(root.id)) continue;
    sign[root.id] = 1;
    std::deque<int> queue{root.id};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& e : w.edges) {
        if (e.u != v && e.v != v) continue;
        int other = e.u == v ? e.v : e.u;
        int want = sign[v] * e.sign;
        auto it = sign.find(other);
        if (it == sign.end()) {
          sign[other] = want;
          queue.push_back(other);
        } else if (it->second != want) {
          throw Error(Stage::plumbing, "epsilon parity 2-colouring impossible", {v, other});
        }
      }
    }
  }

  PlumbingTree t;
  int next = 0;
  for (const auto& v : w.vertices) next = std::max(next, v.id);
  ++next;
  std::map<int, Integer> signed_order;
  for (const auto& v : w.vertices) {
    signed_order[v.id] = sign[v.id] * v.order;
    t.vertices.push_back({v.id, 0, v.genus, signed_order[v.id], "node " + std::to_string(v.id)});
  }

  auto add_chain = [&](int from, const std::vector<Integer>& weights, const std::vector<Integer>& mults,
                       const std::string& origin) {
    int prev = from;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      int id = next++;
      t.vertices.push_back({id, weights[i], 0, mults[i], origin + "#" + std::to_string(i + 1)});
      t.edges.push_back({prev, id, 1});
      prev = id;
    }
    return prev;
  };

  for (const auto& s : w.stalks) {
    if (s.pair.alpha < 2 || s.pair.beta < 1 || s.pair.beta >= s.pair.alpha)
      throw Error(Stage::plumbing, "stalk pair not normalized", {s.vertex});
    auto wts = chain_weights(s.pair.alpha, s.pair.beta);
    auto mults = chain_mults(wts, signed_order[s.vertex], LeafEnd{});
    add_chain(s.vertex, wts, mults, "stalk" + pair_str(s.pair.alpha, s.pair.beta) + "@" + std::to_string(s.vertex));
  }
  for (const auto& a : w.arrows) {
    Integer bind = sign[a.vertex];
    if (a.pair.alpha == 1) {
      t.arrows.push_back({a.vertex, bind, "binding"});
      continue;
    }
    if (a.pair.beta < 0 || a.pair.beta >= a.pair.alpha) throw Error(Stage::plumbing, "arrow pair not normalized", {a.vertex});
    auto wts = chain_weights(a.pair.alpha, a.pair.beta);
    auto mults = chain_mults(wts, signed_order[a.vertex], ArrowEnd{bind});
    int end = add_chain(a.vertex, wts, mults, "arrow" + pair_str(a.pair.alpha, a.pair.beta) + "@" + std::to_string(a.vertex));
    t.arrows.push_back({end, bind, "binding"});
  }
  for (const auto& e : w.edges) {
    if (e.alpha == 1) {
      t.edges.push_back({e.u, e.v, 1});
      continue;
    }
    auto wts = chain_weights(e.alpha, e.beta);
    std::vector<Integer> rev;
    for (auto it = wts.rbegin(); it != wts.rend(); ++it) rev.push_back(-*it);
    if (neg_cf_eval(rev) != Rational(e.alpha, e.alpha - e.beta_dual))
      throw Error(Stage::plumbing, "reversed chain does not evaluate to alpha/(alpha - beta')", {e.u, e.v});
    auto mults = chain_mults(wts, signed_order[e.u], NodeEnd{signed_order[e.v]});
    int end = add_chain(e.u, wts, mults,
                        "edge(" + std::to_string(e.sign) + "," + e.alpha.str() + "," + e.beta.str() + ")" +
                            std::to_string(e.u) + "-" + std::to_string(e.v));
    t.edges.push_back({end, e.v, 1});
  }

  std::vector<int> bad;
  for (const auto& v : w.vertices) {
    Integer sum = 0;
    for (int nb : t.neighbours(v.id)) sum += *t.vertex(nb).mult;
    for (const auto& a : t.arrows)
      if (a.vertex == v.id) sum += a.mult;
    const Integer& m = signed_order[v.id];
    if (sum % m != 0) bad.push_back(v.id);
    else t.vertex(v.id).weight = -sum / m;
  }
  if (!bad.empty()) throw Error(Stage::plumbing, "monodromical balance failure: non-integral node weight", bad);
  auto violations = monodromical_violations(t);
  if (!violations.empty()) throw Error(Stage::plumbing, "synthesized graph violates the monodromical system", violations);
  if (!t.is_tree()) t.notes.push_back("multigraph output: the plumbing graph has parallel chains");
  if (!keep_arrows) t.arrows.clear();
  return t;
}

namespace {

std::optional<std::size_t> blow_down_candidate(const PlumbingTree& t) {
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& v = t.vertices[i];
    if (v.weight != -1 || v.genus != 0 || t.arrow_count(v.id) != 0) continue;
    auto nb = t.neighbours(v.id);
    if (nb.size() > 2) continue;
    if (nb.empty() && t.vertices.size() == 1) continue;
    if (nb.size() == 2 && nb[0] == nb[1]) continue;
    if (std::find(nb.begin(), nb.end(), v.id) != nb.end()) continue;
    return i;
  }
  return std::nullopt;
}

}  // namespace

PlumbingTree blow_down(const PlumbingTree& tree) {
  PlumbingTree t = tree;
  Integer det = abs(determinant(intersection_matrix(t)));
  while (auto idx = blow_down_candidate(t)) {
    int id = t.vertices[*idx].id;
    std::vector<std::pair<int, int>> nbs;  // (neighbour, edge sign)
    for (const auto& e : t.edges) {
      if (e.u == id) nbs.push_back({e.v, e.sign});
      else if (e.v == id) nbs.push_back({e.u, e.sign});
    }
    for (const auto& [nb, s] : nbs) t.vertex(nb).weight += 1;
    if (nbs.size() == 2) t.edges.push_back({nbs[0].first, nbs[1].first, nbs[0].second * nbs[1].second});
    t.edges.erase(std::remove_if(t.edges.begin(), t.edges.end(), [&](const auto& e) { return e.u == id || e.v == id; }),
                  t.edges.end());
    t.vertices.erase(t.vertices.begin() + static_cast<std::ptrdiff_t>(*idx));
    t.notes.push_back("blew down vertex " + std::to_string(id));
    Integer after = abs(determinant(intersection_matrix(t)));
    if (after != det) throw Error(Stage::plumbing, "|det| changed under blow-down", {id});
  }
  return t;
}

PlumbingTree normalize_edge_signs(const PlumbingTree& tree) {
  if (!tree.is_tree()) throw Error(Stage::plumbing, "not a tree: sign normalization skipped");
  PlumbingTree t = tree;
  std::map<int, int> parity{{t.vertices.front().id, 1}};
  std::deque<int> queue{t.vertices.front().id};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& e : t.edges) {
      if (e.u != v && e.v != v) continue;
      int other = e.u == v ? e.v : e.u;
      if (!parity.count(other)) {
        parity[other] = parity[v] * e.sign;
        queue.push_back(other);
      }
    }
  }
  for (auto& v : t.vertices)
    if (v.mult) *v.mult *= parity[v.id];
  for (auto& a : t.arrows) a.mult *= parity[a.vertex];
  for (auto& e : t.edges) e.sign = 1;
  return t;
}

PlumbingTree to_plumbing_tree(const MultPlumbing& mp) {
  PlumbingTree t;
  for (const auto& v : mp.vertices)
    t.vertices.push_back({v.id, v.weight, v.genus, v.m, "v" + std::to_string(v.id) + (v.flipped ? " flipped" : "")});
  for (const auto& e : mp.edges) t.edges.push_back({e.u, e.v, e.sign});
  for (const auto& a : mp.arrows) t.arrows.push_back({a.vertex, a.mult, "L"});
  return t;
}

}  // namespace suslink
