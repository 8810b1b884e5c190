#include "suslink/matrix.hpp"

namespace suslink {

bool IntMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Bareiss without pivoting; pivots[k] is the (k+1)-th leading minor as long
// as all earlier ones are nonzero.
std::vector<Integer> bareiss_pivots(IntMatrix m) {
  const std::size_t n = m.size();
  std::vector<Integer> pivots;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    pivots.push_back(m(k, k));
    if (m(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return pivots;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sgn = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

std::vector<Integer> leading_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    IntMatrix sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

bool is_negative_definite(const IntMatrix& a) {
  if (!a.symmetric()) return false;
  auto pivots = bareiss_pivots(a);
  if (pivots.size() != a.size()) return false;
  // Leading minors alternate in sign starting negative; with Bareiss the
  // pivots are exactly those minors.
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    int want = (k % 2 == 0) ? -1 : 1;
    if (sign(pivots[k]) != want) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].num() == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].num() == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::vector<Rational> multiply(const IntMatrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != 0) out[i] += Rational(a(i, j)) * x[j];
  return out;
}

}  // namespace suslink
