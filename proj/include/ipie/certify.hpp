#pragma once

// A posteriori certification of solution boxes with the Krawczyk operator
//   K(X) = m - Y f(m) + (I - Y J(X)) (X - m),  Y ~ J(m)^-1.
// K(X) inside int(X) proves a unique zero in X; K(X) disjoint from X proves none.

#include <optional>
#include <vector>

#include "algebraic.hpp"
#include "interval.hpp"
#include "linalg.hpp"
#include "newton.hpp"

namespace ipie {

struct CandidateBox {
  std::vector<Interval> coords;
};

inline CandidateBox box_around(const std::vector<AlgebraicNumber>& point, long bits) {
  CandidateBox b;
  for (auto& a : point) {
    Interval e = a.enclosure(bits);
    if (e.width() == 0) e = {e.lo - dyadic_pow2(-bits - 1), e.hi + dyadic_pow2(-bits - 1)};
    b.coords.push_back(e);
  }
  return b;
}

enum class KrawczykOutcome { Unique, NoRoot, Inconclusive };

namespace detail {

inline KrawczykOutcome krawczyk_step(const std::vector<MultiPoly>& system, const JacobianMatrix& J,
                                     std::vector<Interval>& X, long bits) {
  size_t n = X.size();
  Vector m;
  for (auto& x : X) m.push_back(round_dyadic(x.mid(), bits));
  auto Y = inverse(J.evaluate(m));
  if (!Y) fail(ErrorKind::SingularOnBox, "Jacobian singular at the box midpoint");
  for (auto& row : *Y)
    for (auto& y : row) y = round_dyadic(y, bits);
  Vector fm;
  for (auto& p : system) fm.push_back(p.evaluate(m));
  std::vector<std::vector<Interval>> JX(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) JX[r].push_back(widen_dyadic(evaluate(J.entries[r][c], X), bits));
  std::vector<Interval> dx;
  for (size_t i = 0; i < n; ++i) dx.push_back(X[i] - Interval(m[i]));
  std::vector<Interval> K(n);
  bool inside = true, disjoint = false;
  for (size_t i = 0; i < n; ++i) {
    Rational yf = 0;
    for (size_t k = 0; k < n; ++k) yf += (*Y)[i][k] * fm[k];
    Interval acc(m[i] - yf);
    for (size_t j = 0; j < n; ++j) {
      // (I - Y J(X))_{ij}
      Interval e(Rational(i == j ? 1 : 0));
      for (size_t k = 0; k < n; ++k) e = e - (*Y)[i][k] * JX[k][j];
      acc = acc + e * dx[j];
    }
    K[i] = widen_dyadic(acc, bits);
    if (!K[i].strictly_inside(X[i])) inside = false;
    if (K[i].hi < X[i].lo || K[i].lo > X[i].hi) disjoint = true;
  }
  if (inside) return KrawczykOutcome::Unique;
  if (disjoint) return KrawczykOutcome::NoRoot;
  for (size_t i = 0; i < n; ++i) X[i] = {std::max(X[i].lo, K[i].lo), std::min(X[i].hi, K[i].hi)};
  return KrawczykOutcome::Inconclusive;
}

}  // namespace detail

/// True iff the Krawczyk test proves a unique solution inside the box, retrying on the
/// contracted box a bounded number of times.
inline bool certify_box(const std::vector<MultiPoly>& system, const CandidateBox& box, int max_contractions = 16) {
  if (system.size() != box.coords.size()) fail(ErrorKind::VariableMismatch, "box arity differs from system");
  JacobianMatrix J = jacobian(system);
  std::vector<Interval> X = box.coords;
  long bits = 64;
  for (auto& x : X)
    if (x.width() > 0) bits = std::max(bits, 2 * static_cast<long>(-std::floor(log2_abs(x.width()))) + 32);
  for (int it = 0; it < max_contractions; ++it) {
    auto out = detail::krawczyk_step(system, J, X, bits);
    if (out == KrawczykOutcome::Unique) return true;
    if (out == KrawczykOutcome::NoRoot) return false;
  }
  return false;
}

}  // namespace ipie
