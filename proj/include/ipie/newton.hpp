#pragma once

// Multivariate Newton-Raphson on polynomial systems with dyadic big-float iterates.
// Each step solves J(x) d = f(x) exactly over Q and rounds the new iterate to the
// working precision, so runs are bit-reproducible.

#include <cmath>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "multipoly.hpp"

namespace ipie {

struct BigFloatVector {
  std::vector<Rational> coords;  // dyadic, at most precision_bits fractional bits
  long precision_bits = 0;

  size_t size() const { return coords.size(); }
};

struct JacobianMatrix {
  std::vector<std::vector<MultiPoly>> entries;

  size_t rows() const { return entries.size(); }
  Matrix evaluate(const std::vector<Rational>& x) const {
    Matrix m(entries.size());
    for (size_t r = 0; r < entries.size(); ++r)
      for (auto& e : entries[r]) m[r].push_back(e.evaluate(x));
    return m;
  }
};

inline JacobianMatrix jacobian(const std::vector<MultiPoly>& system) {
  if (system.empty()) fail(ErrorKind::NonSquareSystem, "empty system");
  size_t n = system[0].num_vars();
  if (system.size() != n)
    fail(ErrorKind::NonSquareSystem, std::to_string(system.size()) + " equations in " + std::to_string(n) + " variables");
  JacobianMatrix J;
  for (auto& p : system) {
    std::vector<MultiPoly> row;
    for (size_t v = 0; v < n; ++v) row.push_back(p.derivative(v));
    J.entries.push_back(std::move(row));
  }
  return J;
}

/// d^2 + 2 d ceil(log2(H + 1)) + 64.
inline long required_precision_bits(long d, const Integer& H) {
  if (d < 1 || H < 1) fail(ErrorKind::InvalidArgument, "required_precision_bits needs d >= 1 and H >= 1");
  long lg = bit_length(H);  // ceil(log2(H + 1))
  return d * d + 2 * d * lg + 64;
}

/// A square polynomial system, optionally divided through by a product of linear
/// factors (x_v - r) to steer Newton away from solutions already found.
class NewtonSystem {
 public:
  explicit NewtonSystem(std::vector<MultiPoly> polys) : f_(std::move(polys)), J_(jacobian(f_)) {}

  size_t size() const { return f_.size(); }
  const std::vector<MultiPoly>& polynomials() const { return f_; }
  const JacobianMatrix& jacobian_matrix() const { return J_; }

  void add_deflation(size_t var, const Rational& root) { deflation_.emplace_back(var, root); }
  const std::vector<std::pair<size_t, Rational>>& deflation() const { return deflation_; }

  /// Values of the (deflated) system; nullopt on a pole.
  std::optional<Vector> values(const Vector& x) const {
    Vector v;
    for (auto& p : f_) v.push_back(p.evaluate(x));
    if (deflation_.empty()) return v;
    Rational q = deflator(x);
    if (q == 0) return std::nullopt;
    for (auto& e : v) e /= q;
    return v;
  }

  /// Jacobian of the (deflated) system by the quotient rule; nullopt on a pole.
  std::optional<Matrix> jacobian_at(const Vector& x) const {
    Matrix J = J_.evaluate(x);
    if (deflation_.empty()) return J;
    Rational q = deflator(x);
    if (q == 0) return std::nullopt;
    // grad q: d/dx_v prod (x_k - r_k)
    Vector grad(x.size(), Rational(0));
    for (size_t a = 0; a < deflation_.size(); ++a) {
      Rational prod = 1;
      for (size_t b = 0; b < deflation_.size(); ++b)
        if (b != a) prod *= x[deflation_[b].first] - deflation_[b].second;
      grad[deflation_[a].first] += prod;
    }
    for (size_t r = 0; r < J.size(); ++r) {
      Rational fr = f_[r].evaluate(x);
      for (size_t c = 0; c < J[r].size(); ++c) J[r][c] = (J[r][c] * q - fr * grad[c]) / (q * q);
    }
    return J;
  }

 private:
  Rational deflator(const Vector& x) const {
    Rational q = 1;
    for (auto& [v, r] : deflation_) q *= x[v] - r;
    return q;
  }

  std::vector<MultiPoly> f_;
  JacobianMatrix J_;
  std::vector<std::pair<size_t, Rational>> deflation_;
};

namespace detail {

inline std::optional<Vector> newton_step(const NewtonSystem& sys, const Vector& x) {
  auto f = sys.values(x);
  auto J = sys.jacobian_at(x);
  if (!f || !J) return std::nullopt;
  return solve_linear(*J, *f);
}

}  // namespace detail

/// Scalar condition |f f''| < f'^2 for one variable; for several variables a
/// trial step must contract: |d(x - d)| < |d(x)| with d the Newton step.
inline bool convergence_check(const NewtonSystem& sys, const Vector& x) {
  if (sys.size() == 1 && sys.deflation().empty()) {
    const MultiPoly& f = sys.polynomials()[0];
    MultiPoly d1 = f.derivative(0), d2 = d1.derivative(0);
    Rational fv = f.evaluate(x), f1 = d1.evaluate(x), f2 = d2.evaluate(x);
    if (f1 == 0) return false;
    return abs_rat(fv * f2) < f1 * f1;
  }
  auto d0 = detail::newton_step(sys, x);
  if (!d0) return false;
  Rational n0 = norm2_squared(*d0);
  if (n0 == 0) return true;
  Vector x1 = x;
  for (size_t i = 0; i < x.size(); ++i) x1[i] -= (*d0)[i];
  auto d1 = detail::newton_step(sys, x1);
  if (!d1) return false;
  return norm2_squared(*d1) < n0;
}

inline bool convergence_check(const std::vector<MultiPoly>& system, const Vector& x) {
  return convergence_check(NewtonSystem(system), x);
}

struct NewtonOptions {
  int max_iters = 256;
  int starts = 64;
  int max_halvings = 20;
};

/// Iterates until the step is below 2^-target_bits and the residual below 2^-(target_bits/2).
inline BigFloatVector newton_iterate(const NewtonSystem& sys, const BigFloatVector& start, long target_bits,
                                     const NewtonOptions& opt = {}) {
  if (start.size() != sys.size()) fail(ErrorKind::VariableMismatch, "start point arity");
  long prec = target_bits + 64;
  Vector x;
  for (auto& c : start.coords) x.push_back(round_dyadic(c, prec));
  Rational step_tol = dyadic_pow2(-target_bits), res_tol = dyadic_pow2(-target_bits / 2);
  auto inside = [](const Vector& v) {
    for (auto& c : v)
      if (c < -1 || c > 2) return false;
    return true;
  };
  for (int it = 0; it < opt.max_iters; ++it) {
    auto d = detail::newton_step(sys, x);
    if (!d) fail(ErrorKind::SingularJacobian, "singular Jacobian at iteration " + std::to_string(it));
    Rational t = 1;
    Vector next(x.size());
    for (int h = 0;; ++h) {
      for (size_t i = 0; i < x.size(); ++i) next[i] = round_dyadic(x[i] - t * (*d)[i], prec);
      if (inside(next) || h >= opt.max_halvings) break;
      t /= 2;
    }
    Vector diff(x.size());
    for (size_t i = 0; i < x.size(); ++i) diff[i] = next[i] - x[i];
    x = std::move(next);
    if (norm_inf(diff) < step_tol) {
      auto f = sys.values(x);
      if (f && norm_inf(*f) < res_tol) return {x, prec};
    }
  }
  fail(ErrorKind::DidNotConverge, "no convergence within " + std::to_string(opt.max_iters) + " iterations");
}

/// Deterministic start list: all 1/2, all 2^-4, all 1 - 2^-4, then Halton points in (0,1)^m.
inline std::vector<Vector> start_points(size_t m, int count) {
  std::vector<Vector> pts;
  pts.push_back(Vector(m, Rational(1, 2)));
  pts.push_back(Vector(m, Rational(1, 16)));
  pts.push_back(Vector(m, Rational(15, 16)));
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (long idx = 1; static_cast<int>(pts.size()) < count; ++idx) {
    Vector p(m);
    for (size_t d = 0; d < m; ++d) {
      long base = primes[d % 16];
      Rational f(1), r(0);
      for (long i = idx; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
      }
      r.canonicalize();
      p[d] = r;
    }
    pts.push_back(std::move(p));
  }
  pts.resize(static_cast<size_t>(std::max(count, 0)));
  return pts;
}

/// First start (in list order) whose Newton run converges.
inline BigFloatVector multi_start(const NewtonSystem& sys, long target_bits, const NewtonOptions& opt = {}) {
  for (auto& s : start_points(sys.size(), opt.starts)) {
    try {
      return newton_iterate(sys, {s, 0}, target_bits, opt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularJacobian && e.kind() != ErrorKind::DidNotConverge) throw;
    }
  }
  fail(ErrorKind::AllStartsFailed, "Newton failed from all " + std::to_string(opt.starts) + " starts");
}

}  // namespace ipie
