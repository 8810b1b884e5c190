#pragma once

#include "suslink/integer.hpp"
#include "suslink/rational.hpp"

#include <optional>
#include <vector>

namespace suslink {

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool symmetric() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a);

// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1.
std::vector<Integer> leading_minors(const IntMatrix& a);

bool is_negative_definite(const IntMatrix& a);

// Exact solve of A x = b; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Rational>& b);

std::vector<Rational> multiply(const IntMatrix& a, const std::vector<Rational>& x);

}  // namespace suslink
