#pragma once

#include <string>

#include "suslink/suslink.hpp"

namespace suslink::testing {

inline std::string data_path(const std::string& name) { return std::string(SUSLINK_DATA_DIR) + "/" + name; }

inline ResolutionGraph example(int k) { return read_resolution_file(data_path("ex" + std::to_string(k) + ".txt")); }

inline ResolutionGraph cusp() { return read_resolution_file(data_path("cusp.txt")); }

// Paper exponents for the three examples.
inline int example_r(int k) { return k == 1 ? 3 : (k == 2 ? 2 : 5); }

inline Bundle run(const ResolutionGraph& g, long long r, InputSide side = InputSide::fbar_g, bool blow = false) {
  PipelineOptions o;
  o.r = r;
  o.side = side;
  o.blow_down = blow;
  o.compare_holomorphic = false;
  return run_pipeline(g, o);
}

inline std::vector<Integer> ints(std::initializer_list<long long> xs) {
  std::vector<Integer> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace suslink::testing
