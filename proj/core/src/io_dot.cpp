#include "suslink/io.hpp"

#include <sstream>

namespace suslink {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string v(int id) { return "v" + std::to_string(id); }

}  // namespace

std::string to_dot(const MultPlumbing& mp, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (const auto& x : mp.vertices) {
    std::ostringstream label;
    label << x.weight << "\\nm=" << x.m << (x.flipped ? " (flip)" : "");
    os << "  " << v(x.id) << " [label=" << quote(label.str()) << "];\n";
  }
  for (const auto& e : mp.edges) {
    os << "  " << v(e.u) << " -- " << v(e.v);
    if (e.sign != 1) os << " [label=\"-1\"]";
    os << ";\n";
  }
  int k = 0;
  for (const auto& a : mp.arrows) {
    os << "  a" << k << " [shape=point];\n  " << v(a.vertex) << " -- a" << k << " [dir=forward, label=" << quote(a.mult.str())
       << "];\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const NielsenGraph& n, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=box];\n";
  for (const auto& x : n.vertices)
    os << "  " << v(x.id) << " [label=" << quote("[" + x.order.str() + "," + x.genus.str() + "]") << "];\n";
  int k = 0;
  for (const auto& s : n.stalks) {
    os << "  s" << k << " [shape=plaintext, label=" << quote(valency_label(s.valency)) << "];\n  " << v(s.vertex) << " -- s" << k
       << ";\n";
    ++k;
  }
  k = 0;
  for (const auto& b : n.boundaries) {
    os << "  b" << k << " [shape=plaintext, label=" << quote(valency_label(b.valency) + " t=" + b.twist.str()) << "];\n  "
       << v(b.vertex) << " -- b" << k << " [dir=forward];\n";
    ++k;
  }
  for (const auto& e : n.edges)
    os << "  " << v(e.u) << " -- " << v(e.v) << " [label=" << quote("t=" + e.twist.str())
       << ", taillabel=" << quote(valency_label(e.at_u)) << ", headlabel=" << quote(valency_label(e.at_v)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const WaldhausenGraph& w, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=box];\n";
  for (const auto& x : w.vertices)
    os << "  " << v(x.id) << " [label=" << quote("[e=" + x.e.str() + "," + x.genus.str() + "]") << "];\n";
  int k = 0;
  for (const auto& s : w.stalks) {
    os << "  s" << k << " [shape=plaintext, label=" << quote("(" + s.pair.alpha.str() + "," + s.pair.beta.str() + ")")
       << "];\n  " << v(s.vertex) << " -- s" << k << ";\n";
    ++k;
  }
  k = 0;
  for (const auto& a : w.arrows) {
    os << "  a" << k << " [shape=plaintext, label=" << quote("(" + a.pair.alpha.str() + "," + a.pair.beta.str() + ")")
       << "];\n  " << v(a.vertex) << " -- a" << k << " [dir=forward];\n";
    ++k;
  }
  for (const auto& e : w.edges)
    os << "  " << v(e.u) << " -- " << v(e.v)
       << " [label=" << quote("(" + std::to_string(e.sign) + "," + e.alpha.str() + "," + e.beta.str() + ")")
       << ", headlabel=" << quote(e.beta_dual.str()) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const PlumbingTree& t, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (const auto& x : t.vertices) {
    std::string label = x.weight.str();
    if (x.genus != 0) label += "\\ng=" + x.genus.str();
    if (x.mult) label += "\\nm=" + x.mult->str();
    os << "  " << v(x.id) << " [label=" << quote(label) << "];\n";
  }
  for (const auto& e : t.edges) {
    os << "  " << v(e.u) << " -- " << v(e.v);
    if (e.sign != 1) os << " [label=\"-1\"]";
    os << ";\n";
  }
  int k = 0;
  for (const auto& a : t.arrows) {
    os << "  a" << k << " [shape=point];\n  " << v(a.vertex) << " -- a" << k << " [dir=forward, label=" << quote(a.mult.str())
       << "];\n";
    ++k;
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Bundle& b, StageId stage, bool full) {
  std::ostringstream os;
  auto show = [&](StageId s) { return full ? static_cast<int>(s) <= static_cast<int>(stage) : s == stage; };
  if ((show(StageId::step1) || (!full && stage == StageId::input)) && b.step1) os << to_dot(*b.step1, "step1");
  if (show(StageId::nielsen) && b.nielsen) os << to_dot(*b.nielsen, "nielsen");
  if (show(StageId::power) && b.powered) os << to_dot(*b.powered, "nielsen_power");
  if (show(StageId::waldhausen) && b.waldhausen) os << to_dot(*b.waldhausen, "waldhausen");
  if ((show(StageId::plumbing) || (!full && stage == StageId::invariants)) && b.tree) os << to_dot(*b.tree, "plumbing");
  return os.str();
}

}  // namespace suslink
