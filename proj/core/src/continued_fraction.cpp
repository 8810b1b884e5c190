#include "suslink/continued_fraction.hpp"

#include "suslink/error.hpp"

namespace suslink {

std::vector<Integer> neg_cf_expand(const Integer& num, const Integer& den) {
  if (den <= 0) throw Error(Stage::core, "neg_cf_expand: denominator must be positive");
  if (den > num) throw Error(Stage::core, "neg_cf_expand: denominator exceeds numerator");
  if (gcd(num, den) != 1) throw Error(Stage::core, "neg_cf_expand: arguments not coprime");
  if (den == num) throw Error(Stage::core, "neg_cf_expand: 1/1 has no chain");
  std::vector<Integer> out;
  Integer p = num, q = den;
  while (q != 0) {
    Integer b = (p + q - 1) / q;
    out.push_back(b);
    Integer next = b * q - p;
    p = q;
    q = next;
  }
  return out;
}

Rational neg_cf_eval(const std::vector<Integer>& b) {
  if (b.empty()) throw Error(Stage::core, "neg_cf_eval: empty chain");
  Rational value(b.back());
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    if (value.num() == 0) throw Error(Stage::core, "degenerate chain");
    value = Rational(b[i]) - Rational(Integer(1)) / value;
  }
  return value;
}

Integer cf_dual(const Integer& alpha, const Integer& beta) {
  if (alpha < 1) throw Error(Stage::core, "cf_dual: alpha must be positive");
  if (alpha == 1) return 0;
  auto inv = mod_inverse(beta, alpha);
  if (!inv) throw Error(Stage::core, "cf_dual: beta not invertible mod alpha");
  return *inv;
}

}  // namespace suslink
