#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace suslink {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Representative of a mod m in [0, m); m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Floor division, m > 0.
inline Integer floor_div(const Integer& a, const Integer& m) {
  Integer q = a / m;
  if ((a % m != 0) && (a < 0)) --q;
  return q;
}

// Inverse of a mod m in [0, m); nullopt when gcd(a, m) != 1. m >= 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace suslink
