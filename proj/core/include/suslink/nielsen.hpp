#pragma once

#include "suslink/nielsen_graph.hpp"
#include "suslink/resolution_graph.hpp"

#include <vector>

namespace suslink {

struct StalkChain {
  int node = 0;
  std::vector<int> chain;  // from the node outward; last entry is the leaf
};

struct EdgeChain {
  int node_i = 0;
  std::vector<int> chain;  // read from node_i
  int node_j = 0;
  int sign = 1;            // product of all edge signs along the chain
};

struct NodeArrow {
  int node = 0;
  Integer mult;
};

struct Decomposition {
  std::vector<int> nodes;
  std::vector<StalkChain> stalk_chains;
  std::vector<EdgeChain> edge_chains;
  std::vector<NodeArrow> node_arrows;
};

Decomposition decompose(const MultPlumbing& mp);

NielsenGraph build_nielsen(const MultPlumbing& mp);

}  // namespace suslink
