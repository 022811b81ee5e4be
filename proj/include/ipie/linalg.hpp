#pragma once

// Exact dense linear algebra over Q (small systems only).

#include <optional>
#include <vector>

#include "rational.hpp"

namespace ipie {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Solves A x = b by Gaussian elimination; nullopt when A is singular.
inline std::optional<Vector> solve_linear(Matrix A, Vector b) {
  size_t n = A.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = c + 1; r < n; ++r) {
      if (A[r][c] == 0) continue;
      Rational f = A[r][c] / A[c][c];
      for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  Vector x(n);
  for (size_t r = n; r-- > 0;) {
    Rational s = b[r];
    for (size_t k = r + 1; k < n; ++k) s -= A[r][k] * x[k];
    x[r] = s / A[r][r];
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& A) {
  size_t n = A.size();
  Matrix inv(n, Vector(n));
  for (size_t c = 0; c < n; ++c) {
    Vector e(n, Rational(0));
    e[c] = 1;
    auto col = solve_linear(A, e);
    if (!col) return std::nullopt;
    for (size_t r = 0; r < n; ++r) inv[r][c] = (*col)[r];
  }
  return inv;
}

inline Rational norm2_squared(const Vector& v) {
  Rational s = 0;
  for (auto& x : v) s += x * x;
  return s;
}

inline Rational norm_inf(const Vector& v) {
  Rational m = 0;
  for (auto& x : v) m = std::max(m, abs_rat(x));
  return m;
}

}  // namespace ipie
