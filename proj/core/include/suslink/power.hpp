#pragma once

#include "suslink/nielsen_graph.hpp"

namespace suslink {

// Nielsen graph of h^r from that of h.
NielsenGraph power_nielsen(const NielsenGraph& n, const Integer& r);

// lambda^(r) = lambda * n_i / n, sigma^(r) * (r / n) = sigma (mod lambda^(r)).
Valency power_valency(const Valency& v, const Integer& order, const Integer& r);

}  // namespace suslink
