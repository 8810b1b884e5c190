#include "suslink/error.hpp"
#include "suslink/io.hpp"

#include <json.hpp>

#include <limits>

namespace suslink {

using json = nlohmann::ordered_json;

namespace {

json int_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Integer int_of(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(Stage::io, "expected an integer, got " + j.dump());
}

Rational rat_of(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(Stage::io, "expected a rational, got " + j.dump());
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Stage::io, std::string("missing field '") + key + "'");
  return j.at(key);
}

json notes_json(const std::vector<std::string>& notes) { return json(notes); }

std::vector<std::string> notes_of(const json& j) {
  if (!j.contains("notes")) return {};
  return j.at("notes").get<std::vector<std::string>>();
}

// ResolutionGraph

json to_j(const ResolutionGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    json x{{"id", v.id}, {"weight", int_json(v.weight)}, {"genus", int_json(v.genus)}};
    if (v.mf) x["mf"] = int_json(*v.mf);
    if (v.mg) x["mg"] = int_json(*v.mg);
    j["vertices"].push_back(x);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.u, e.v});
  j["arrows"] = json::array();
  for (const auto& a : g.arrows)
    j["arrows"].push_back({{"vertex", a.vertex}, {"side", a.side == Germ::f ? "f" : "g"}, {"mult", a.own_mult()}});
  return j;
}

ResolutionGraph resolution_of(const json& j) {
  ResolutionGraph g;
  for (const auto& x : need(j, "vertices")) {
    ResolutionVertex v;
    v.id = need(x, "id").get<int>();
    v.weight = int_of(need(x, "weight"));
    v.genus = int_of(need(x, "genus"));
    if (x.contains("mf")) v.mf = int_of(x["mf"]);
    if (x.contains("mg")) v.mg = int_of(x["mg"]);
    g.vertices.push_back(v);
  }
  for (const auto& e : need(j, "edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  for (const auto& x : need(j, "arrows")) {
    ResolutionArrow a;
    a.vertex = need(x, "vertex").get<int>();
    a.side = need(x, "side").get<std::string>() == "g" ? Germ::g : Germ::f;
    int own = need(x, "mult").get<int>();
    a.mult = a.side == Germ::f ? own : -own;
    g.arrows.push_back(a);
  }
  return g;
}

// MultPlumbing

json to_j(const MultPlumbing& mp) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : mp.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"weight", int_json(v.weight)},
                             {"genus", int_json(v.genus)},
                             {"m", int_json(v.m)},
                             {"flipped", v.flipped}});
  j["edges"] = json::array();
  for (const auto& e : mp.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}});
  j["arrows"] = json::array();
  for (const auto& a : mp.arrows) j["arrows"].push_back({{"vertex", a.vertex}, {"mult", int_json(a.mult)}});
  return j;
}

MultPlumbing mult_of(const json& j) {
  MultPlumbing mp;
  for (const auto& x : need(j, "vertices"))
    mp.vertices.push_back({need(x, "id").get<int>(), int_of(need(x, "weight")), int_of(need(x, "genus")),
                           int_of(need(x, "m")), need(x, "flipped").get<bool>()});
  for (const auto& x : need(j, "edges"))
    mp.edges.push_back({need(x, "u").get<int>(), need(x, "v").get<int>(), need(x, "sign").get<int>()});
  for (const auto& x : need(j, "arrows")) mp.arrows.push_back({need(x, "vertex").get<int>(), int_of(need(x, "mult"))});
  return mp;
}

// NielsenGraph

json val_j(const Valency& v) { return json::array({int_json(v.lambda), int_json(v.sigma)}); }
Valency val_of(const json& j) { return make_valency(int_of(j.at(0)), int_of(j.at(1))); }

json to_j(const NielsenGraph& n) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : n.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"order", int_json(v.order)},
                             {"genus", int_json(v.genus)},
                             {"q", int_json(v.q)},
                             {"origin", v.origin}});
  j["stalks"] = json::array();
  for (const auto& s : n.stalks) j["stalks"].push_back({{"vertex", s.vertex}, {"valency", val_j(s.valency)}});
  j["boundary_stalks"] = json::array();
  for (const auto& b : n.boundaries)
    j["boundary_stalks"].push_back({{"vertex", b.vertex}, {"valency", val_j(b.valency)}, {"twist", b.twist.str()}});
  j["edges"] = json::array();
  for (const auto& e : n.edges)
    j["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"twist", e.twist.str()}, {"valency_u", val_j(e.at_u)}, {"valency_v", val_j(e.at_v)}});
  j["notes"] = notes_json(n.notes);
  return j;
}

NielsenGraph nielsen_of(const json& j) {
  NielsenGraph n;
  for (const auto& x : need(j, "vertices"))
    n.vertices.push_back({need(x, "id").get<int>(), int_of(need(x, "order")), int_of(need(x, "genus")),
                          int_of(need(x, "q")), x.value("origin", "")});
  for (const auto& x : need(j, "stalks")) n.stalks.push_back({need(x, "vertex").get<int>(), val_of(need(x, "valency"))});
  for (const auto& x : need(j, "boundary_stalks"))
    n.boundaries.push_back({need(x, "vertex").get<int>(), val_of(need(x, "valency")), rat_of(need(x, "twist"))});
  for (const auto& x : need(j, "edges"))
    n.edges.push_back({need(x, "u").get<int>(), need(x, "v").get<int>(), rat_of(need(x, "twist")),
                       val_of(need(x, "valency_u")), val_of(need(x, "valency_v"))});
  n.notes = notes_of(j);
  return n;
}

// WaldhausenGraph

json pair_j(const SeifertPair& p) { return json::array({int_json(p.alpha), int_json(p.beta)}); }
SeifertPair pair_of(const json& j) { return {int_of(j.at(0)), int_of(j.at(1))}; }

json to_j(const WaldhausenGraph& w) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : w.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"e", int_json(v.e)},
                             {"genus", int_json(v.genus)},
                             {"q", int_json(v.q)},
                             {"order", int_json(v.order)},
                             {"origin", v.origin}});
  j["stalks"] = json::array();
  for (const auto& s : w.stalks) j["stalks"].push_back({{"vertex", s.vertex}, {"pair", pair_j(s.pair)}});
  j["arrows"] = json::array();
  for (const auto& a : w.arrows) j["arrows"].push_back({{"vertex", a.vertex}, {"pair", pair_j(a.pair)}});
  j["edges"] = json::array();
  for (const auto& e : w.edges)
    j["edges"].push_back({{"u", e.u},
                          {"v", e.v},
                          {"epsilon", e.sign},
                          {"alpha", int_json(e.alpha)},
                          {"beta", int_json(e.beta)},
                          {"beta_dual", int_json(e.beta_dual)}});
  j["notes"] = notes_json(w.notes);
  return j;
}

WaldhausenGraph waldhausen_of(const json& j) {
  WaldhausenGraph w;
  for (const auto& x : need(j, "vertices"))
    w.vertices.push_back({need(x, "id").get<int>(), int_of(need(x, "e")), int_of(need(x, "genus")), int_of(need(x, "q")),
                          int_of(need(x, "order")), x.value("origin", "")});
  for (const auto& x : need(j, "stalks")) w.stalks.push_back({need(x, "vertex").get<int>(), pair_of(need(x, "pair"))});
  for (const auto& x : need(j, "arrows")) w.arrows.push_back({need(x, "vertex").get<int>(), pair_of(need(x, "pair"))});
  for (const auto& x : need(j, "edges"))
    w.edges.push_back({need(x, "u").get<int>(), need(x, "v").get<int>(), need(x, "epsilon").get<int>(),
                       int_of(need(x, "alpha")), int_of(need(x, "beta")), int_of(need(x, "beta_dual"))});
  w.notes = notes_of(j);
  return w;
}

// PlumbingTree

json to_j(const PlumbingTree& t) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) {
    json x{{"id", v.id}, {"weight", int_json(v.weight)}, {"genus", int_json(v.genus)}};
    if (v.mult) x["mult"] = int_json(*v.mult);
    x["origin"] = v.origin;
    j["vertices"].push_back(x);
  }
  j["edges"] = json::array();
  for (const auto& e : t.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}});
  j["arrows"] = json::array();
  for (const auto& a : t.arrows)
    j["arrows"].push_back({{"vertex", a.vertex}, {"mult", int_json(a.mult)}, {"label", a.label}});
  j["notes"] = notes_json(t.notes);
  return j;
}

PlumbingTree tree_of(const json& j) {
  PlumbingTree t;
  for (const auto& x : need(j, "vertices")) {
    PlumbingVertex v;
    v.id = need(x, "id").get<int>();
    v.weight = int_of(need(x, "weight"));
    v.genus = int_of(need(x, "genus"));
    if (x.contains("mult")) v.mult = int_of(x["mult"]);
    v.origin = x.value("origin", "");
    t.vertices.push_back(v);
  }
  for (const auto& x : need(j, "edges"))
    t.edges.push_back({need(x, "u").get<int>(), need(x, "v").get<int>(), need(x, "sign").get<int>()});
  for (const auto& x : need(j, "arrows"))
    t.arrows.push_back({need(x, "vertex").get<int>(), int_of(need(x, "mult")), x.value("label", "")});
  t.notes = notes_of(j);
  for (const auto& e : t.edges)
    if (!t.has_vertex(e.u) || !t.has_vertex(e.v)) throw Error(Stage::io, "edge endpoint is not a vertex", {e.u, e.v});
  return t;
}

// ObstructionReport

json to_j(const ObstructionReport& r) {
  json j;
  j["K"] = json::array();
  for (const auto& k : r.K) j["K"].push_back(k.str());
  j["K_squared"] = r.K_squared.str();
  j["numerically_gorenstein"] = r.numerically_gorenstein;
  j["chi_resolution"] = int_json(r.chi_resolution);
  j["chi_fibre_fg"] = int_json(r.chi_fibre_fg);
  j["fibre_genus"] = int_json(r.fibre_genus);
  j["fibre_boundary"] = int_json(r.fibre_boundary);
  j["chi_fibre_F"] = int_json(r.chi_fibre_F);
  j["wedge_count"] = int_json(r.wedge_count);
  json ls{{"applicable", r.ls.applicable}, {"left", int_json(r.ls.left)}};
  if (r.ls.applicable) {
    ls["right"] = int_json(r.ls.right);
    ls["chi_plus_K2"] = int_json(r.ls.chi_plus_k2);
    ls["congruent"] = r.ls.congruent;
  }
  j["laufer_steenbrink"] = ls;
  j["negative_definite"] = r.negative_definite;
  j["determinant"] = int_json(r.determinant);
  return j;
}

ObstructionReport report_of(const json& j) {
  ObstructionReport r;
  for (const auto& k : need(j, "K")) r.K.push_back(rat_of(k));
  r.K_squared = rat_of(need(j, "K_squared"));
  r.numerically_gorenstein = need(j, "numerically_gorenstein").get<bool>();
  r.chi_resolution = int_of(need(j, "chi_resolution"));
  r.chi_fibre_fg = int_of(need(j, "chi_fibre_fg"));
  r.fibre_genus = int_of(need(j, "fibre_genus"));
  r.fibre_boundary = int_of(need(j, "fibre_boundary"));
  r.chi_fibre_F = int_of(need(j, "chi_fibre_F"));
  r.wedge_count = int_of(need(j, "wedge_count"));
  const auto& ls = need(j, "laufer_steenbrink");
  r.ls.applicable = need(ls, "applicable").get<bool>();
  r.ls.left = int_of(need(ls, "left"));
  if (r.ls.applicable) {
    r.ls.right = int_of(need(ls, "right"));
    r.ls.chi_plus_k2 = int_of(need(ls, "chi_plus_K2"));
    r.ls.congruent = need(ls, "congruent").get<bool>();
  }
  r.negative_definite = need(j, "negative_definite").get<bool>();
  r.determinant = int_of(need(j, "determinant"));
  return r;
}

json fibre_j(const FibreEuler& f) {
  return {{"chi", int_json(f.chi)}, {"genus", int_json(f.genus)}, {"boundary", int_json(f.boundary)}};
}
FibreEuler fibre_of(const json& j) { return {int_of(need(j, "chi")), int_of(need(j, "genus")), int_of(need(j, "boundary"))}; }

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Stage::io, std::string("malformed JSON: ") + e.what());
  }
}

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema)
    throw Error(Stage::io, std::string("unsupported document: expected schema ") + kSchema);
}

}  // namespace

std::string to_json(const Bundle& b) {
  json j;
  j["schema"] = kSchema;
  if (b.input || b.step1) {
    j["stage"] = stage_id_name(b.reached());
    j["options"] = {{"r", int_json(b.options.r)},
                    {"keep_arrows", b.options.keep_arrows},
                    {"blow_down", b.options.blow_down},
                    {"side", side_name(b.options.side)},
                    {"compare_holomorphic", b.options.compare_holomorphic}};
  }
  if (b.input) j["input"] = to_j(*b.input);
  if (b.step1) j["step1"] = to_j(*b.step1);
  if (b.nielsen) j["nielsen"] = to_j(*b.nielsen);
  if (b.powered) j["power"] = to_j(*b.powered);
  if (b.waldhausen) j["waldhausen"] = to_j(*b.waldhausen);
  if (b.synthesized) j["synthesized"] = to_j(*b.synthesized);
  if (b.tree) j["plumbing"] = to_j(*b.tree);
  if (b.report) j["invariants"] = to_j(*b.report);
  if (b.comparison) {
    const auto& c = *b.comparison;
    json cj{{"computed", c.computed}};
    if (c.computed) {
      cj["links_coincide"] = c.links_coincide;
      cj["fibre_fbar_g"] = fibre_j(c.fibre_fbar_g);
      cj["fibre_fg"] = fibre_j(c.fibre_fg);
    } else {
      cj["failure"] = c.failure;
    }
    j["holomorphic_comparison"] = cj;
  }
  if (!b.notes.empty()) j["notes"] = b.notes;
  return j.dump(2) + "\n";
}

Bundle bundle_from_json(const std::string& text) {
  json j = parse_doc(text);
  check_schema(j);
  Bundle b;
  try {
    if (j.contains("options")) {
      const auto& o = j["options"];
      b.options.r = int_of(need(o, "r"));
      b.options.keep_arrows = need(o, "keep_arrows").get<bool>();
      b.options.blow_down = need(o, "blow_down").get<bool>();
      b.options.side = parse_side(need(o, "side").get<std::string>());
      b.options.compare_holomorphic = need(o, "compare_holomorphic").get<bool>();
    }
    if (j.contains("input")) b.input = resolution_of(j["input"]);
    if (j.contains("step1")) b.step1 = mult_of(j["step1"]);
    if (j.contains("nielsen")) b.nielsen = nielsen_of(j["nielsen"]);
    if (j.contains("power")) b.powered = nielsen_of(j["power"]);
    if (j.contains("waldhausen")) b.waldhausen = waldhausen_of(j["waldhausen"]);
    if (j.contains("synthesized")) b.synthesized = tree_of(j["synthesized"]);
    if (j.contains("plumbing")) b.tree = tree_of(j["plumbing"]);
    if (j.contains("invariants")) b.report = report_of(j["invariants"]);
    if (j.contains("holomorphic_comparison")) {
      const auto& cj = j["holomorphic_comparison"];
      HolomorphicComparison c;
      c.computed = need(cj, "computed").get<bool>();
      if (c.computed) {
        c.links_coincide = need(cj, "links_coincide").get<bool>();
        c.fibre_fbar_g = fibre_of(need(cj, "fibre_fbar_g"));
        c.fibre_fg = fibre_of(need(cj, "fibre_fg"));
      } else {
        c.failure = cj.value("failure", "");
      }
      b.comparison = c;
    }
    if (j.contains("notes")) b.notes = j["notes"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(Stage::io, std::string("malformed document: ") + e.what());
  }
  return b;
}

std::string to_json(const PlumbingTree& tree) {
  json j;
  j["schema"] = kSchema;
  j["plumbing"] = to_j(tree);
  return j.dump(2) + "\n";
}

PlumbingTree tree_from_json(const std::string& text) {
  json j = parse_doc(text);
  check_schema(j);
  try {
    return tree_of(need(j, "plumbing"));
  } catch (const json::exception& e) {
    throw Error(Stage::io, std::string("malformed document: ") + e.what());
  }
}

}  // namespace suslink
