#pragma once

#include "suslink/integer.hpp"
#include "suslink/rational.hpp"

#include <vector>

namespace suslink {

// [b_1, ..., b_k] = b_1 - 1/(b_2 - 1/(... - 1/b_k)).
std::vector<Integer> neg_cf_expand(const Integer& num, const Integer& den);

// Exact value of the bracket. Throws "degenerate chain" on a zero intermediate.
Rational neg_cf_eval(const std::vector<Integer>& b);

// beta' in [0, alpha) with beta * beta' = 1 mod alpha; 0 when alpha = 1.
Integer cf_dual(const Integer& alpha, const Integer& beta);

}  // namespace suslink
