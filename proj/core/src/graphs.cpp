#include "suslink/error.hpp"
#include "suslink/nielsen_graph.hpp"
#include "suslink/plumbing_tree.hpp"
#include "suslink/resolution_graph.hpp"
#include "suslink/waldhausen_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace suslink {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::core: return "core";
    case Stage::input: return "input";
    case Stage::step1: return "step1";
    case Stage::nielsen: return "nielsen";
    case Stage::power: return "power";
    case Stage::waldhausen: return "waldhausen";
    case Stage::plumbing: return "plumbing";
    case Stage::invariants: return "invariants";
    case Stage::io: return "io";
  }
  return "?";
}

namespace {

std::string format_error(Stage stage, const std::string& what, const std::vector<int>& ids) {
  std::ostringstream os;
  os << "[" << stage_name(stage) << "] " << what;
  if (!ids.empty()) {
    os << " (vertices";
    for (int id : ids) os << " " << id;
    os << ")";
  }
  return os.str();
}

template <class V>
std::size_t find_index(const V& vertices, int id, Stage stage) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw Error(stage, "unknown vertex id", {id});
}

}  // namespace

Error::Error(Stage stage, const std::string& what, std::vector<int> ids)
    : std::runtime_error(format_error(stage, what, ids)), stage_(stage), ids_(std::move(ids)), detail_(what) {}

// PlumbingTree

std::size_t PlumbingTree::index_of(int id) const { return find_index(vertices, id, Stage::plumbing); }

bool PlumbingTree::has_vertex(int id) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v.id == id; });
}

std::size_t PlumbingTree::edge_valence(int id) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == id) + (e.v == id);
  return d;
}

std::size_t PlumbingTree::arrow_count(int id) const {
  return std::count_if(arrows.begin(), arrows.end(), [&](const auto& a) { return a.vertex == id; });
}

std::vector<int> PlumbingTree::neighbours(int id) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.u == id) out.push_back(e.v);
    if (e.v == id) out.push_back(e.u);
  }
  return out;
}

bool PlumbingTree::connected() const {
  if (vertices.empty()) return true;
  std::set<int> seen{vertices.front().id};
  std::vector<int> stack{vertices.front().id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbours(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices.size();
}

bool PlumbingTree::is_tree() const {
  if (vertices.empty()) return false;
  for (const auto& e : edges)
    if (e.u == e.v) return false;
  return edges.size() + 1 == vertices.size() && connected();
}

bool PlumbingTree::has_multiplicities() const {
  return !vertices.empty() &&
         std::all_of(vertices.begin(), vertices.end(), [](const auto& v) { return v.mult.has_value(); });
}

int PlumbingTree::next_id() const {
  int m = 0;
  for (const auto& v : vertices) m = std::max(m, v.id);
  return m + 1;
}

IntMatrix intersection_matrix(const PlumbingTree& tree) {
  IntMatrix a(tree.vertices.size());
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) a(i, i) = tree.vertices[i].weight;
  for (const auto& e : tree.edges) {
    std::size_t i = tree.index_of(e.u), j = tree.index_of(e.v);
    a(i, j) += e.sign;
    a(j, i) += e.sign;
  }
  return a;
}

std::vector<int> monodromical_violations(const PlumbingTree& tree) {
  if (!tree.has_multiplicities()) throw Error(Stage::plumbing, "monodromical check needs multiplicities");
  std::vector<Integer> lhs(tree.vertices.size());
  for (std::size_t i = 0; i < tree.vertices.size(); ++i)
    lhs[i] = tree.vertices[i].weight * *tree.vertices[i].mult;
  for (const auto& e : tree.edges) {
    std::size_t i = tree.index_of(e.u), j = tree.index_of(e.v);
    lhs[i] += e.sign * *tree.vertices[j].mult;
    lhs[j] += e.sign * *tree.vertices[i].mult;
  }
  for (const auto& a : tree.arrows) lhs[tree.index_of(a.vertex)] += a.mult;
  std::vector<int> bad;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != 0) bad.push_back(tree.vertices[i].id);
  return bad;
}

namespace {

struct Shape {
  std::vector<std::pair<Integer, Integer>> label;  // (weight, genus)
  std::vector<std::vector<std::pair<int, int>>> adj;  // (edge count, sign sum)
};

Shape shape_of(const PlumbingTree& t) {
  const std::size_t n = t.vertices.size();
  Shape s;
  s.adj.assign(n, std::vector<std::pair<int, int>>(n, {0, 0}));
  for (const auto& v : t.vertices) s.label.emplace_back(v.weight, v.genus);
  for (const auto& e : t.edges) {
    std::size_t i = t.index_of(e.u), j = t.index_of(e.v);
    s.adj[i][j].first++;
    s.adj[i][j].second += e.sign;
    if (i != j) {
      s.adj[j][i].first++;
      s.adj[j][i].second += e.sign;
    }
  }
  return s;
}

}  // namespace

bool isomorphic(const PlumbingTree& a, const PlumbingTree& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  const std::size_t n = a.vertices.size();
  Shape sa = shape_of(a), sb = shape_of(b);
  auto degree = [](const Shape& s, std::size_t i) {
    int d = 0;
    for (const auto& c : s.adj[i]) d += c.first;
    return d;
  };
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa.label[i] != sb.label[c] || degree(sa, i) != degree(sb, c)) continue;
      bool ok = sa.adj[i][i] == sb.adj[c][c];
      for (std::size_t k = 0; ok && k < i; ++k) ok = sa.adj[i][k] == sb.adj[c][map[k]];
      if (!ok) continue;
      map[i] = static_cast<int>(c);
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(0);
}

// ResolutionGraph / MultPlumbing

std::size_t ResolutionGraph::index_of(int id) const { return find_index(vertices, id, Stage::input); }

bool ResolutionGraph::has_vertex(int id) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v.id == id; });
}

std::size_t ResolutionGraph::edge_valence(int id) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == id) + (e.v == id);
  return d;
}

std::size_t ResolutionGraph::arrow_count(int id) const {
  return std::count_if(arrows.begin(), arrows.end(), [&](const auto& a) { return a.vertex == id; });
}

std::size_t MultPlumbing::index_of(int id) const { return find_index(vertices, id, Stage::step1); }

std::size_t MultPlumbing::edge_valence(int id) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == id) + (e.v == id);
  return d;
}

std::size_t MultPlumbing::arrow_count(int id) const {
  return std::count_if(arrows.begin(), arrows.end(), [&](const auto& a) { return a.vertex == id; });
}

bool MultPlumbing::is_node(int id) const {
  return edge_valence(id) + arrow_count(id) >= 3 || vertex(id).genus >= 1;
}

std::vector<int> MultPlumbing::nodes() const {
  std::vector<int> out;
  for (const auto& v : vertices)
    if (is_node(v.id)) out.push_back(v.id);
  return out;
}

// Nielsen / Waldhausen

Valency make_valency(const Integer& lambda, const Integer& sigma) {
  if (lambda < 1) throw Error(Stage::core, "valency with non-positive lambda");
  if (gcd(lambda, sigma) != 1) throw Error(Stage::core, "valency (" + lambda.str() + "," + sigma.str() + ") is not coprime");
  return Valency{lambda, mod(sigma, lambda)};
}

std::string valency_label(const Valency& v) {
  std::string s = "(" + v.lambda.str() + "," + v.sigma.str() + ")";
  if (v.sigma != 0) s += "~(" + v.lambda.str() + "," + Integer(v.sigma - v.lambda).str() + ")";
  return s;
}

std::size_t NielsenGraph::index_of(int id) const { return find_index(vertices, id, Stage::nielsen); }

std::size_t WaldhausenGraph::index_of(int id) const { return find_index(vertices, id, Stage::waldhausen); }

NielsenGraph canonical_form(const NielsenGraph& n) {
  NielsenGraph c;
  c.vertices = n.vertices;
  for (auto& v : c.vertices) v.origin.clear();
  std::sort(c.vertices.begin(), c.vertices.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  c.stalks = n.stalks;
  std::sort(c.stalks.begin(), c.stalks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.vertex, a.valency) < std::tie(b.vertex, b.valency);
  });
  c.boundaries = n.boundaries;
  std::sort(c.boundaries.begin(), c.boundaries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.vertex, a.valency, a.twist) < std::tie(b.vertex, b.valency, b.twist);
  });
  c.edges = n.edges;
  for (auto& e : c.edges)
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      std::swap(e.at_u, e.at_v);
    }
  std::sort(c.edges.begin(), c.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.twist, a.at_u, a.at_v) < std::tie(b.u, b.v, b.twist, b.at_u, b.at_v);
  });
  return c;
}

bool isomorphic(const NielsenGraph& a, const NielsenGraph& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace suslink
