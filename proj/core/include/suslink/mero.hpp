#pragma once

#include "suslink/nielsen_graph.hpp"
#include "suslink/waldhausen_graph.hpp"

namespace suslink {

WaldhausenGraph mero_waldhausen(const NielsenGraph& n);

}  // namespace suslink
