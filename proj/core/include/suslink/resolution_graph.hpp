#pragma once

#include "suslink/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suslink {

enum class Germ { f, g };

struct ResolutionVertex {
  int id = 0;
  Integer weight;
  Integer genus = 0;
  std::optional<Integer> mf;
  std::optional<Integer> mg;
  friend bool operator==(const ResolutionVertex&, const ResolutionVertex&) = default;
};

struct ResolutionEdge {
  int u = 0;
  int v = 0;
  friend bool operator==(const ResolutionEdge&, const ResolutionEdge&) = default;
};

// mult is stored in the L_f - L_g orientation: own multiplicity for f arrows,
// its negative for g arrows.
struct ResolutionArrow {
  int vertex = 0;
  int mult = 1;
  Germ side = Germ::f;
  int own_mult() const { return side == Germ::f ? mult : -mult; }
  friend bool operator==(const ResolutionArrow&, const ResolutionArrow&) = default;
};

struct ResolutionGraph {
  std::vector<ResolutionVertex> vertices;
  std::vector<ResolutionEdge> edges;
  std::vector<ResolutionArrow> arrows;

  std::size_t index_of(int id) const;
  bool has_vertex(int id) const;
  std::size_t edge_valence(int id) const;
  std::size_t arrow_count(int id) const;

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

struct MultVertex {
  int id = 0;
  Integer weight;
  Integer genus = 0;
  Integer m;
  bool flipped = false;
  friend bool operator==(const MultVertex&, const MultVertex&) = default;
};

struct MultEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
  friend bool operator==(const MultEdge&, const MultEdge&) = default;
};

struct MultArrow {
  int vertex = 0;
  Integer mult;
  friend bool operator==(const MultArrow&, const MultArrow&) = default;
};

// Step 1 output: single multiplicities, orientation flips recorded on the
// vertices and as edge signs.
struct MultPlumbing {
  std::vector<MultVertex> vertices;
  std::vector<MultEdge> edges;
  std::vector<MultArrow> arrows;

  std::size_t index_of(int id) const;
  const MultVertex& vertex(int id) const { return vertices[index_of(id)]; }
  std::size_t edge_valence(int id) const;
  std::size_t arrow_count(int id) const;
  bool is_node(int id) const;
  std::vector<int> nodes() const;

  friend bool operator==(const MultPlumbing&, const MultPlumbing&) = default;
};

}  // namespace suslink
