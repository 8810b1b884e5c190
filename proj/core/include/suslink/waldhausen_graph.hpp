#pragma once

#include "suslink/integer.hpp"

#include <string>
#include <vector>

namespace suslink {

struct SeifertPair {
  Integer alpha = 1;
  Integer beta = 0;
  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

struct WaldhausenVertex {
  int id = 0;
  Integer e;
  Integer genus = 0;
  Integer q = 1;
  Integer order;  // carried from the Nielsen stage; synthesis needs it
  std::string origin;
  friend bool operator==(const WaldhausenVertex&, const WaldhausenVertex&) = default;
};

struct WaldhausenStalk {
  int vertex = 0;
  SeifertPair pair;
  friend bool operator==(const WaldhausenStalk&, const WaldhausenStalk&) = default;
};

struct WaldhausenArrow {
  int vertex = 0;
  SeifertPair pair;
  friend bool operator==(const WaldhausenArrow&, const WaldhausenArrow&) = default;
};

// beta belongs to the u end, beta_dual to the v end.
struct WaldhausenEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
  Integer alpha = 1;
  Integer beta = 0;
  Integer beta_dual = 0;
  friend bool operator==(const WaldhausenEdge&, const WaldhausenEdge&) = default;
};

struct WaldhausenGraph {
  std::vector<WaldhausenVertex> vertices;
  std::vector<WaldhausenStalk> stalks;
  std::vector<WaldhausenArrow> arrows;
  std::vector<WaldhausenEdge> edges;
  std::vector<std::string> notes;

  std::size_t index_of(int id) const;
  const WaldhausenVertex& vertex(int id) const { return vertices[index_of(id)]; }

  friend bool operator==(const WaldhausenGraph&, const WaldhausenGraph&) = default;
};

}  // namespace suslink
