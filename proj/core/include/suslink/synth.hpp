#pragma once

#include "suslink/plumbing_tree.hpp"
#include "suslink/resolution_graph.hpp"
#include "suslink/waldhausen_graph.hpp"

#include <variant>
#include <vector>

namespace suslink {

struct LeafEnd {};
struct ArrowEnd {
  Integer mult;
};
struct NodeEnd {
  Integer mult;
};
using ChainEnd = std::variant<LeafEnd, ArrowEnd, NodeEnd>;

// Multiplicities of the chain vertices with weights[0] next to the vertex of
// multiplicity left_mult.
std::vector<Integer> chain_mults(const std::vector<Integer>& weights, const Integer& left_mult, const ChainEnd& right);

PlumbingTree synth_plumbing(const WaldhausenGraph& w, bool keep_arrows = false);

PlumbingTree blow_down(const PlumbingTree& tree);

PlumbingTree normalize_edge_signs(const PlumbingTree& tree);

// The Step 1 plumbing as a tree in its orientation-flipped form.
PlumbingTree to_plumbing_tree(const MultPlumbing& mp);

}  // namespace suslink
