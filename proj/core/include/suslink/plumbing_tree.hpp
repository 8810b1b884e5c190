#pragma once

#include "suslink/integer.hpp"
#include "suslink/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suslink {

struct PlumbingVertex {
  int id = 0;
  Integer weight;
  Integer genus = 0;
  std::optional<Integer> mult;
  std::string origin;
  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

struct PlumbingEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
  friend bool operator==(const PlumbingEdge&, const PlumbingEdge&) = default;
};

struct PlumbingArrow {
  int vertex = 0;
  Integer mult;
  std::string label;
  friend bool operator==(const PlumbingArrow&, const PlumbingArrow&) = default;
};

// Weighted plumbing graph. Trees are the normal case; parallel edges are
// tolerated because synthesis can produce them (two chains between the same
// pair of nodes collapse to a double edge after blow-down).
struct PlumbingTree {
  std::vector<PlumbingVertex> vertices;
  std::vector<PlumbingEdge> edges;
  std::vector<PlumbingArrow> arrows;
  std::vector<std::string> notes;

  std::size_t index_of(int id) const;
  bool has_vertex(int id) const;
  const PlumbingVertex& vertex(int id) const { return vertices[index_of(id)]; }
  PlumbingVertex& vertex(int id) { return vertices[index_of(id)]; }
  std::size_t edge_valence(int id) const;
  std::size_t arrow_count(int id) const;
  std::vector<int> neighbours(int id) const;
  bool connected() const;
  bool is_tree() const;
  bool has_multiplicities() const;
  int next_id() const;

  friend bool operator==(const PlumbingTree&, const PlumbingTree&) = default;
};

IntMatrix intersection_matrix(const PlumbingTree& tree);

// Vertex ids where b_v m_v + sum(eps_e m_u) + arrows_v != 0. Requires multiplicities.
std::vector<int> monodromical_violations(const PlumbingTree& tree);

// Structural isomorphism of weighted graphs (weights, genera, edge multiplicity
// and sign); multiplicities, arrows and ids are ignored.
bool isomorphic(const PlumbingTree& a, const PlumbingTree& b);

}  // namespace suslink
