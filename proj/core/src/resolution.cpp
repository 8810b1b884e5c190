#include "suslink/resolution.hpp"

#include "suslink/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace suslink {

const char* side_name(InputSide s) {
  switch (s) {
    case InputSide::fbar_g: return "fg";
    case InputSide::f: return "f";
    case InputSide::g: return "g";
    case InputSide::sum: return "sum";
  }
  return "?";
}

InputSide parse_side(const std::string& name) {
  if (name == "fg" || name == "fbar_g") return InputSide::fbar_g;
  if (name == "f") return InputSide::f;
  if (name == "g") return InputSide::g;
  if (name == "sum") return InputSide::sum;
  throw Error(Stage::input, "unknown side '" + name + "' (expected fg, f, g or sum)");
}

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw Error(Stage::input, "line " + std::to_string(line) + ": " + msg);
}

int parse_id(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) syntax(line, "bad vertex id '" + tok + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    syntax(line, "bad vertex id '" + tok + "'");
  }
}

Integer parse_int(const std::string& tok, int line) {
  std::string body = tok;
  if (!body.empty() && body[0] == '+') body = body.substr(1);
  bool ok = !body.empty();
  for (std::size_t i = 0; i < body.size(); ++i)
    if (!(std::isdigit(static_cast<unsigned char>(body[i])) || (i == 0 && body[i] == '-' && body.size() > 1))) ok = false;
  if (!ok) syntax(line, "bad integer '" + tok + "'");
  return Integer(body);
}

std::map<std::string, std::string> parse_keys(const std::vector<std::string>& toks, std::size_t from, int line) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0) syntax(line, "expected key=value, got '" + toks[i] + "'");
    auto key = toks[i].substr(0, eq);
    if (!kv.emplace(key, toks[i].substr(eq + 1)).second) syntax(line, "repeated key '" + key + "'");
  }
  return kv;
}

void check_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> allowed, int line) {
  for (const auto& [k, v] : kv)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      syntax(line, "unknown key '" + k + "'");
}

int find_root(std::map<int, int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ResolutionGraph parse_resolution(const std::string& text) {
  ResolutionGraph g;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::set<int> ids;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const auto& kind = toks[0];
    if (kind == "vertex") {
      if (toks.size() < 2) syntax(line, "vertex needs an id");
      ResolutionVertex v;
      v.id = parse_id(toks[1], line);
      auto kv = parse_keys(toks, 2, line);
      check_keys(kv, {"weight", "genus", "mf", "mg"}, line);
      if (!kv.count("weight")) syntax(line, "vertex " + toks[1] + " lacks weight=");
      v.weight = parse_int(kv["weight"], line);
      if (kv.count("genus")) v.genus = parse_int(kv["genus"], line);
      if (v.genus < 0) syntax(line, "negative genus");
      if (kv.count("mf")) v.mf = parse_int(kv["mf"], line);
      if (kv.count("mg")) v.mg = parse_int(kv["mg"], line);
      if (!ids.insert(v.id).second) syntax(line, "duplicate vertex id " + toks[1]);
      g.vertices.push_back(v);
    } else if (kind == "edge") {
      if (toks.size() != 3) syntax(line, "edge needs exactly two ids");
      g.edges.push_back({parse_id(toks[1], line), parse_id(toks[2], line)});
    } else if (kind == "arrow") {
      if (toks.size() < 2) syntax(line, "arrow needs a vertex id");
      ResolutionArrow a;
      a.vertex = parse_id(toks[1], line);
      auto kv = parse_keys(toks, 2, line);
      check_keys(kv, {"side", "mult"}, line);
      if (!kv.count("side")) syntax(line, "arrow lacks side=");
      if (kv["side"] == "f") a.side = Germ::f;
      else if (kv["side"] == "g") a.side = Germ::g;
      else syntax(line, "arrow side must be f or g");
      int own = 1;
      if (kv.count("mult")) {
        Integer m = parse_int(kv["mult"], line);
        if (m != 1 && m != -1) syntax(line, "arrow mult must be +1 or -1");
        own = static_cast<int>(m);
      }
      a.mult = a.side == Germ::f ? own : -own;
      g.arrows.push_back(a);
    } else {
      syntax(line, "unknown directive '" + kind + "'");
    }
  }

  if (g.vertices.empty()) throw Error(Stage::input, "empty vertex set");
  std::map<int, int> parent;
  for (int id : ids) parent[id] = id;
  for (const auto& e : g.edges) {
    if (!ids.count(e.u) || !ids.count(e.v)) throw Error(Stage::input, "edge endpoint is not a vertex", {e.u, e.v});
    if (e.u == e.v) throw Error(Stage::input, "not a tree: loop", {e.u});
    int a = find_root(parent, e.u), b = find_root(parent, e.v);
    if (a == b) throw Error(Stage::input, "not a tree: edge closes a cycle", {e.u, e.v});
    parent[a] = b;
  }
  if (g.edges.size() + 1 != g.vertices.size()) throw Error(Stage::input, "not a tree: graph is disconnected");
  for (const auto& a : g.arrows)
    if (!ids.count(a.vertex)) throw Error(Stage::input, "arrow on unknown vertex", {a.vertex});

  auto all_or_none = [&](auto field, const char* name) {
    std::size_t have = std::count_if(g.vertices.begin(), g.vertices.end(), [&](const auto& v) { return (v.*field).has_value(); });
    if (have != 0 && have != g.vertices.size())
      throw Error(Stage::input, std::string("either every vertex carries ") + name + "= or none does");
  };
  all_or_none(&ResolutionVertex::mf, "mf");
  all_or_none(&ResolutionVertex::mg, "mg");
  return g;
}

ResolutionGraph read_resolution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::input, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_resolution(ss.str());
}

IntMatrix intersection_matrix(const ResolutionGraph& graph) {
  IntMatrix a(graph.vertices.size());
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) a(i, i) = graph.vertices[i].weight;
  for (const auto& e : graph.edges) {
    std::size_t i = graph.index_of(e.u), j = graph.index_of(e.v);
    a(i, j) += 1;
    a(j, i) += 1;
  }
  return a;
}

std::vector<Integer> solve_monodromical(const ResolutionGraph& graph, Germ side) {
  const std::size_t n = graph.vertices.size();
  IntMatrix a = intersection_matrix(graph);
  std::vector<Integer> b(n, 0);
  for (const auto& arrow : graph.arrows)
    if (arrow.side == side) b[graph.index_of(arrow.vertex)] += arrow.own_mult();

  auto supplied = side == Germ::f ? &ResolutionVertex::mf : &ResolutionVertex::mg;
  if (graph.vertices.front().*supplied) {
    std::vector<Integer> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = *(graph.vertices[i].*supplied);
    std::vector<int> bad;
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = b[i];
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * m[j];
      if (s != 0) bad.push_back(graph.vertices[i].id);
    }
    if (!bad.empty())
      throw Error(Stage::step1, std::string("supplied m") + (side == Germ::f ? "f" : "g") + " violates the monodromical system", bad);
    return m;
  }

  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(Integer(-b[i]));
  auto x = solve_exact(a, rhs);
  if (!x) throw Error(Stage::step1, "degenerate monodromical system");
  std::vector<Integer> m(n);
  std::vector<int> bad;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*x)[i].is_integer()) bad.push_back(graph.vertices[i].id);
    else m[i] = (*x)[i].num();
  }
  if (!bad.empty()) throw Error(Stage::step1, "inconsistent arrow data", bad);
  return m;
}

FibredCheck check_fibred(const ResolutionGraph& graph, const std::vector<Integer>& m) {
  FibredCheck out;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& v = graph.vertices[i];
    bool node = graph.edge_valence(v.id) + graph.arrow_count(v.id) >= 3 || v.genus >= 1;
    if (node && m[i] == 0) {
      out.fibred = false;
      out.offending.push_back(v.id);
    }
  }
  return out;
}

MultPlumbing subtract_and_normalize(const ResolutionGraph& graph, InputSide side) {
  auto mf = solve_monodromical(graph, Germ::f);
  auto mg = solve_monodromical(graph, Germ::g);

  MultPlumbing mp;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const auto& v = graph.vertices[i];
    Integer m;
    switch (side) {
      case InputSide::fbar_g: m = mf[i] - mg[i]; break;
      case InputSide::f: m = mf[i]; break;
      case InputSide::g: m = mg[i]; break;
      case InputSide::sum: m = mf[i] + mg[i]; break;
    }
    mp.vertices.push_back({v.id, v.weight, v.genus, m, false});
  }
  for (const auto& e : graph.edges) mp.edges.push_back({e.u, e.v, 1});
  for (const auto& a : graph.arrows) {
    switch (side) {
      case InputSide::fbar_g: mp.arrows.push_back({a.vertex, a.mult}); break;
      case InputSide::f:
        if (a.side == Germ::f) mp.arrows.push_back({a.vertex, a.own_mult()});
        break;
      case InputSide::g:
        if (a.side == Germ::g) mp.arrows.push_back({a.vertex, a.own_mult()});
        break;
      case InputSide::sum: mp.arrows.push_back({a.vertex, a.own_mult()}); break;
    }
  }

  std::vector<int> bad;
  for (int id : mp.nodes())
    if (mp.vertex(id).m == 0) bad.push_back(id);
  if (!bad.empty()) throw Error(Stage::step1, "not fibred: node with m = 0", bad);
  return normalize_orientation(std::move(mp));
}

MultPlumbing normalize_orientation(MultPlumbing mp) {
  for (auto& v : mp.vertices) {
    if (v.m >= 0) continue;
    v.m = -v.m;
    v.flipped = !v.flipped;
    for (auto& e : mp.edges)
      if (e.u == v.id || e.v == v.id) e.sign = -e.sign;
    for (auto& a : mp.arrows)
      if (a.vertex == v.id) a.mult = -a.mult;
  }
  return mp;
}

}  // namespace suslink
