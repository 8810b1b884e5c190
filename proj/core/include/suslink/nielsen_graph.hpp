#pragma once

#include "suslink/integer.hpp"
#include "suslink/rational.hpp"

#include <string>
#include <vector>

namespace suslink {

// sigma is kept as the representative in [0, lambda).
struct Valency {
  Integer lambda = 1;
  Integer sigma = 0;
  friend bool operator==(const Valency&, const Valency&) = default;
  friend bool operator<(const Valency& a, const Valency& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.sigma < b.sigma;
  }
};

Valency make_valency(const Integer& lambda, const Integer& sigma);

// "(l,s)" with s canonical, followed by "~(l,s-l)" when s != 0.
std::string valency_label(const Valency& v);

struct NielsenVertex {
  int id = 0;
  Integer order;
  Integer genus = 0;
  Integer q = 1;
  std::string origin;
  friend bool operator==(const NielsenVertex&, const NielsenVertex&) = default;
};

struct NielsenStalk {
  int vertex = 0;
  Valency valency;
  friend bool operator==(const NielsenStalk&, const NielsenStalk&) = default;
};

struct NielsenBoundary {
  int vertex = 0;
  Valency valency;
  Rational twist;
  friend bool operator==(const NielsenBoundary&, const NielsenBoundary&) = default;
};

struct NielsenEdge {
  int u = 0;
  int v = 0;
  Rational twist;
  Valency at_u;
  Valency at_v;
  friend bool operator==(const NielsenEdge&, const NielsenEdge&) = default;
};

struct NielsenGraph {
  std::vector<NielsenVertex> vertices;
  std::vector<NielsenStalk> stalks;
  std::vector<NielsenBoundary> boundaries;
  std::vector<NielsenEdge> edges;
  std::vector<std::string> notes;

  std::size_t index_of(int id) const;
  const NielsenVertex& vertex(int id) const { return vertices[index_of(id)]; }

  friend bool operator==(const NielsenGraph&, const NielsenGraph&) = default;
};

// Sorted incidence lists with edges oriented u <= v; notes and origins dropped.
// Two graphs over the same vertex ids are isomorphic iff their canonical forms agree.
NielsenGraph canonical_form(const NielsenGraph& n);
bool isomorphic(const NielsenGraph& a, const NielsenGraph& b);

}  // namespace suslink
