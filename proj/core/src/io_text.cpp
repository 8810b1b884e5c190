#include "suslink/io.hpp"

#include <sstream>

namespace suslink {

namespace {

void notes_block(std::ostringstream& os, const std::vector<std::string>& notes) {
  for (const auto& n : notes) os << "  note: " << n << "\n";
}

std::string side_title(InputSide s) {
  switch (s) {
    case InputSide::fbar_g: return "m = mf - mg";
    case InputSide::f: return "m = mf";
    case InputSide::g: return "m = mg";
    case InputSide::sum: return "m = mf + mg";
  }
  return "";
}

}  // namespace

std::string to_text(const MultPlumbing& mp) {
  std::ostringstream os;
  for (const auto& v : mp.vertices) {
    os << "vertex " << v.id << "  b=" << v.weight << " g=" << v.genus << " m=" << v.m;
    if (v.flipped) os << " flipped";
    if (mp.is_node(v.id)) os << "  node";
    os << "\n";
  }
  for (const auto& e : mp.edges) os << "edge " << e.u << " -- " << e.v << "  eps=" << e.sign << "\n";
  for (const auto& a : mp.arrows) os << "arrow at " << a.vertex << "  mult=" << a.mult << "\n";
  return os.str();
}

std::string to_text(const NielsenGraph& n) {
  std::ostringstream os;
  for (const auto& v : n.vertices) {
    os << "vertex " << v.id << "  [" << v.order << "," << v.genus << "]";
    if (v.q != 1) os << " q=" << v.q;
    os << "\n";
    for (const auto& s : n.stalks)
      if (s.vertex == v.id) os << "  stalk " << valency_label(s.valency) << "\n";
    for (const auto& b : n.boundaries)
      if (b.vertex == v.id) os << "  boundary-stalk " << valency_label(b.valency) << " t=" << b.twist << "\n";
  }
  for (const auto& e : n.edges)
    os << "edge " << e.u << " -- " << e.v << "  t=" << e.twist << "  " << valency_label(e.at_u) << " | "
       << valency_label(e.at_v) << "\n";
  notes_block(os, n.notes);
  return os.str();
}

std::string to_text(const WaldhausenGraph& w) {
  std::ostringstream os;
  for (const auto& v : w.vertices) {
    os << "vertex " << v.id << "  e=" << v.e << " g=" << v.genus << " q=" << v.q << "  (order " << v.order << ")\n";
    for (const auto& s : w.stalks)
      if (s.vertex == v.id) os << "  stalk (" << s.pair.alpha << "," << s.pair.beta << ")\n";
    for (const auto& a : w.arrows)
      if (a.vertex == v.id) os << "  arrow (" << a.pair.alpha << "," << a.pair.beta << ")\n";
  }
  for (const auto& e : w.edges)
    os << "edge " << e.u << " -- " << e.v << "  (" << e.sign << "," << e.alpha << "," << e.beta << ") beta'=" << e.beta_dual
       << "\n";
  notes_block(os, w.notes);
  return os.str();
}

std::string to_text(const PlumbingTree& t) {
  std::ostringstream os;
  os << t.vertices.size() << " vertices, " << t.edges.size() << " edges\n";
  for (const auto& v : t.vertices) {
    os << "vertex " << v.id << "  b=" << v.weight;
    if (v.genus != 0) os << " g=" << v.genus;
    if (v.mult) os << " m=" << *v.mult;
    if (!v.origin.empty()) os << "  [" << v.origin << "]";
    os << "\n";
  }
  for (const auto& e : t.edges) {
    os << "edge " << e.u << " -- " << e.v;
    if (e.sign != 1) os << "  eps=" << e.sign;
    os << "\n";
  }
  for (const auto& a : t.arrows) os << "arrow at " << a.vertex << "  mult=" << a.mult << " (" << a.label << ")\n";
  notes_block(os, t.notes);
  return os.str();
}

std::string to_text(const ObstructionReport& r) {
  std::ostringstream os;
  os << "K = (";
  for (std::size_t i = 0; i < r.K.size(); ++i) os << (i ? ", " : "") << r.K[i];
  os << ")\n";
  os << "K^2 = " << r.K_squared << "\n";
  os << "numerically Gorenstein: " << (r.numerically_gorenstein ? "yes" : "no") << "\n";
  os << "chi(resolution) = " << r.chi_resolution << "\n";
  os << "Milnor fibre of the plane germ: chi = " << r.chi_fibre_fg << ", genus " << r.fibre_genus << ", "
     << r.fibre_boundary << " boundary components\n";
  os << "chi(F_F) = " << r.chi_fibre_F << " (wedge of " << r.wedge_count << " 2-spheres)\n";
  if (r.ls.applicable)
    os << "Laufer-Steenbrink: chi(F_F) mod 12 = " << r.ls.left << ", chi + K^2 = " << r.ls.chi_plus_k2 << " = "
       << r.ls.right << " mod 12, " << (r.ls.congruent ? "congruent" : "not congruent") << "\n";
  else
    os << "Laufer-Steenbrink: not applicable (not numerically Gorenstein)\n";
  os << "negative definite: " << (r.negative_definite ? "yes" : "no") << "\n";
  os << "det = " << r.determinant << "\n";
  return os.str();
}

std::string to_text(const Bundle& b, StageId stage, bool full) {
  std::ostringstream os;
  auto show = [&](StageId s) { return full ? static_cast<int>(s) <= static_cast<int>(stage) : s == stage; };
  if (show(StageId::input) && b.input) {
    os << "== resolution graph ==\n";
    os << b.input->vertices.size() << " vertices, " << b.input->edges.size() << " edges, " << b.input->arrows.size()
       << " arrows\n";
  }
  if (show(StageId::step1) && b.step1)
    os << "== step 1: plumbing with multiplicities (" << side_title(b.options.side) << ") ==\n" << to_text(*b.step1);
  if (show(StageId::nielsen) && b.nielsen) os << "== step 2: Nielsen graph N(h) ==\n" << to_text(*b.nielsen);
  if (show(StageId::power) && b.powered) os << "== step 3: Nielsen graph N(h^" << b.options.r << ") ==\n" << to_text(*b.powered);
  if (show(StageId::waldhausen) && b.waldhausen) os << "== step 4: Waldhausen graph ==\n" << to_text(*b.waldhausen);
  if (show(StageId::plumbing) && b.tree) {
    os << "== step 5: plumbing graph of the link" << (b.options.blow_down ? " (blown down)" : "") << " ==\n"
       << to_text(*b.tree);
    os << "det = " << determinant(*b.tree) << "\n";
  }
  if (show(StageId::invariants) && b.report) {
    os << "== invariants ==\n" << to_text(*b.report);
    if (b.comparison && b.comparison->computed) {
      const auto& c = *b.comparison;
      os << "== comparison with the holomorphic product fg ==\n";
      os << "blown-down plumbing graphs " << (c.links_coincide ? "coincide" : "differ") << "\n";
      os << "fibre of f.g-bar: chi " << c.fibre_fbar_g.chi << ", genus " << c.fibre_fbar_g.genus << ", "
         << c.fibre_fbar_g.boundary << " boundary\n";
      os << "fibre of fg:      chi " << c.fibre_fg.chi << ", genus " << c.fibre_fg.genus << ", " << c.fibre_fg.boundary
         << " boundary\n";
    } else if (b.comparison) {
      os << "== comparison with the holomorphic product fg ==\nnot computed: " << b.comparison->failure << "\n";
    }
    for (const auto& n : b.notes) os << "note: " << n << "\n";
  }
  return os.str();
}

}  // namespace suslink
