#pragma once

#include "suslink/integer.hpp"
#include "suslink/matrix.hpp"
#include "suslink/resolution_graph.hpp"

#include <string>
#include <vector>

namespace suslink {

// Which Milnor fibration Step 1 prepares.
//   fbar_g: m = mf - mg, all arrows (the real germ f.g-bar)
//   f, g:   one holomorphic germ, its own arrows only
//   sum:    m = mf + mg, all arrows positive (the holomorphic product fg)
enum class InputSide { fbar_g, f, g, sum };

const char* side_name(InputSide s);
InputSide parse_side(const std::string& name);

ResolutionGraph parse_resolution(const std::string& text);
ResolutionGraph read_resolution_file(const std::string& path);

IntMatrix intersection_matrix(const ResolutionGraph& graph);

// Solves (or verifies) M m + b = 0 for one germ; b counts that germ's arrows
// with their own multiplicities.
std::vector<Integer> solve_monodromical(const ResolutionGraph& graph, Germ side);

struct FibredCheck {
  bool fibred = true;
  std::vector<int> offending;
};

// m is indexed like graph.vertices.
FibredCheck check_fibred(const ResolutionGraph& graph, const std::vector<Integer>& m);

MultPlumbing subtract_and_normalize(const ResolutionGraph& graph, InputSide side = InputSide::fbar_g);

// Flips every vertex carrying m < 0: m becomes |m|, the flip flag toggles, its
// arrows change sign and every incident edge sign toggles. Identity on
// already-normalized input.
MultPlumbing normalize_orientation(MultPlumbing mp);

}  // namespace suslink
