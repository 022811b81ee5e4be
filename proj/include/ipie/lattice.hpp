#pragma once

// LLL reduction in exact integer arithmetic.

#include <vector>

#include "rational.hpp"

namespace ipie {

struct IntegerLattice {
  std::vector<std::vector<Integer>> basis;  // rows
};

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;  // squared norms of the orthogonalized rows
};

inline Rational dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rational(s);
}

inline GramSchmidt gram_schmidt(const IntegerLattice& L) {
  size_t n = L.basis.size();
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  gs.B.assign(n, Rational(0));
  std::vector<std::vector<Rational>> star(n);
  for (size_t i = 0; i < n; ++i) {
    star[i].assign(L.basis[i].begin(), L.basis[i].end());
    for (size_t j = 0; j < i; ++j) {
      Rational d = 0;
      for (size_t c = 0; c < star[j].size(); ++c) d += Rational(L.basis[i][c]) * star[j][c];
      gs.mu[i][j] = gs.B[j] == 0 ? Rational(0) : d / gs.B[j];
      for (size_t c = 0; c < star[i].size(); ++c) star[i][c] -= gs.mu[i][j] * star[j][c];
    }
    for (auto& c : star[i]) gs.B[i] += c * c;
    gs.mu[i][i] = 1;
  }
  return gs;
}

/// Size-reduced basis satisfying the Lovasz condition with parameter delta. Integral
/// variant: Gram-Schmidt data is kept as the integers d_i and lambda_ij (Cohen, Alg. 2.6.7).
inline IntegerLattice lll_reduce(IntegerLattice L, const Rational& delta = Rational(3, 4)) {
  if (!(delta > Rational(1, 4) && delta < 1)) fail(ErrorKind::InvalidArgument, "delta must lie in (1/4, 1)");
  const size_t n = L.basis.size();
  if (n == 0) return L;
  const Integer dp = delta.get_num(), dq = delta.get_den();
  auto& b = L.basis;
  auto idot = [&](size_t i, size_t j) {
    Integer s = 0;
    for (size_t c = 0; c < b[i].size(); ++c) s += b[i][c] * b[j][c];
    return s;
  };
  // 1-based in d and lam; row i of b is b_{i+1}
  std::vector<Integer> d(n + 1, Integer(0));
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  d[0] = 1;
  d[1] = idot(0, 0);
  if (d[1] == 0) fail(ErrorKind::DependentRows, "lattice rows are linearly dependent");

  auto redi = [&](size_t k, size_t l) {
    if (2 * abs_int(lam[k][l]) <= d[l]) return;
    Integer q = floor_rat(Rational(2 * lam[k][l] + d[l], 2 * d[l]));
    for (size_t c = 0; c < b[k - 1].size(); ++c) b[k - 1][c] -= q * b[l - 1][c];
    lam[k][l] -= q * d[l];
    for (size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 1; j <= k; ++j) {
        Integer u = idot(k - 1, j - 1);
        for (size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) fail(ErrorKind::DependentRows, "lattice rows are linearly dependent");
    }
    redi(k, k - 1);
    if (dq * d[k] * d[k - 2] < dp * d[k - 1] * d[k - 1] - dq * lam[k][k - 1] * lam[k][k - 1]) {
      std::swap(b[k - 1], b[k - 2]);
      for (size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      Integer l = lam[k][k - 1];
      Integer B = (d[k - 2] * d[k] + l * l) / d[k - 1];
      for (size_t i = k + 1; i <= kmax; ++i) {
        Integer t = lam[i][k];
        lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
        lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
      }
      d[k - 1] = B;
      if (k > 2) --k;
    } else {
      for (size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
  }
  return L;
}

/// Checks size reduction and the Lovasz condition.
inline bool is_lll_reduced(const IntegerLattice& L, const Rational& delta = Rational(3, 4)) {
  GramSchmidt gs = gram_schmidt(L);
  size_t n = L.basis.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (abs_rat(gs.mu[i][j]) > Rational(1, 2)) return false;
  for (size_t k = 1; k < n; ++k)
    if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) return false;
  return true;
}

}  // namespace ipie
