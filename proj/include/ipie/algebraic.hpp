#pragma once

// Real algebraic numbers as (irreducible minimal polynomial, isolating interval),
// conjugate orbits, exact sign determination and quadratic radicals.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factor.hpp"
#include "interval.hpp"
#include "multipoly.hpp"
#include "unipoly.hpp"

namespace ipie {

class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

  explicit AlgebraicNumber(const Rational& q) : minpoly_(upoly::ZVec{-q.get_num(), q.get_den()}) {
    Rational c = q;
    c.canonicalize();
    iv_ = {floor_rat(c) - 1, ceil_rat(c) + 1};
  }

  /// `minpoly` must be irreducible with exactly one root in the open interval.
  AlgebraicNumber(UniPoly minpoly, IsolatingInterval iv, bool check_irreducible = true)
      : minpoly_(std::move(minpoly)), iv_(std::move(iv)) {
    if (minpoly_.degree() < 1) fail(ErrorKind::InvalidArgument, "minimal polynomial must be nonconstant");
    if (check_irreducible && !is_irreducible(minpoly_))
      fail(ErrorKind::Reducible, "minimal polynomial is reducible: " + minpoly_.to_string());
    if (sturm_count(minpoly_, iv_.lo, iv_.hi) != 1)
      fail(ErrorKind::InvalidArgument, "interval does not isolate exactly one root");
  }

  const UniPoly& minpoly() const { return minpoly_; }
  const IsolatingInterval& interval() const { return iv_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }

  /// Exact value of a degree-1 number.
  Rational rational_value() const {
    if (!is_rational()) fail(ErrorKind::InvalidArgument, "not a rational number");
    Rational q(-minpoly_[0], minpoly_[1]);
    q.canonicalize();
    return q;
  }

  /// Same number, interval narrowed to width <= max_width.
  AlgebraicNumber refined_to(const Rational& max_width) const {
    AlgebraicNumber a = *this;
    if (is_rational()) {
      if (a.iv_.width() > max_width) {
        Rational q = rational_value();
        long k = 0;
        while (dyadic_pow2(-k) > max_width) ++k;
        a.iv_ = {q - dyadic_pow2(-k - 1), q + dyadic_pow2(-k - 1)};
      }
      return a;
    }
    a.iv_ = refine_interval(minpoly_, iv_, max_width);
    return a;
  }

  AlgebraicNumber refine(long extra_bits) const { return refined_to(iv_.width() * dyadic_pow2(-extra_bits)); }

  /// A rational within 2^-bits of the number.
  Rational approx(long bits) const {
    if (is_rational()) return rational_value();
    return refined_to(dyadic_pow2(-bits)).iv_.midpoint();
  }

  /// Enclosure of width <= 2^-bits.
  Interval enclosure(long bits) const {
    if (is_rational()) return Interval(rational_value());
    auto r = refined_to(dyadic_pow2(-bits));
    return {r.iv_.lo, r.iv_.hi};
  }

  double to_double() const { return approx(60).get_d(); }

  /// -1, 0, 1 comparing with a rational.
  int compare(const Rational& q) const {
    if (is_rational()) return sgn(rational_value() - q);
    if (q <= iv_.lo) return 1;
    if (q >= iv_.hi) return -1;
    // irreducible of degree >= 2, so q is not a root; the sign change sits on one side of q
    return minpoly_.sign_at(q) == minpoly_.sign_at(iv_.lo) ? 1 : -1;
  }

  /// Exact comparison of two algebraic numbers.
  int compare(const AlgebraicNumber& o) const {
    if (is_rational()) return -o.compare(rational_value());
    if (o.is_rational()) return compare(o.rational_value());
    if (minpoly_ == o.minpoly_) {
      Rational lo = std::max(iv_.lo, o.iv_.lo), hi = std::min(iv_.hi, o.iv_.hi);
      if (lo < hi && sturm_count(minpoly_, lo, hi) == 1) return 0;
    }
    AlgebraicNumber a = *this, b = o;
    // distinct numbers: refine until the intervals separate
    while (!(a.iv_.hi <= b.iv_.lo || b.iv_.hi <= a.iv_.lo)) {
      a = a.refine(1);
      b = b.refine(1);
    }
    return a.iv_.hi <= b.iv_.lo ? -1 : 1;
  }

  bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
  bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }

  AlgebraicNumber operator-() const {
    upoly::ZVec c = minpoly_.coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return AlgebraicNumber(UniPoly(c), {-iv_.hi, -iv_.lo}, false);
  }

  /// 1 - a, computed exactly by a Taylor shift of the minimal polynomial.
  AlgebraicNumber one_minus() const {
    if (is_rational()) return AlgebraicNumber(Rational(1) - rational_value());
    upoly::QVec shifted = upoly::compose_linear(upoly::to_q(minpoly_.coeffs()), Rational(-1), Rational(1));
    return AlgebraicNumber(UniPoly::from_rational(shifted), {1 - iv_.hi, 1 - iv_.lo}, false);
  }

  std::string to_string(int digits = 12) const { return to_decimal(approx(static_cast<long>(digits * 3.33) + 8), digits); }

 private:
  UniPoly minpoly_;
  IsolatingInterval iv_;
};

struct GaloisOrbit {
  UniPoly minpoly;
  std::vector<AlgebraicNumber> roots;  // all real roots, ascending
  std::optional<int> group_order_hint;
};

/// The real conjugates of an irreducible polynomial.
inline GaloisOrbit conjugates(const UniPoly& minpoly) {
  if (!is_irreducible(minpoly)) fail(ErrorKind::Reducible, "conjugates needs an irreducible polynomial");
  GaloisOrbit orbit{minpoly, {}, std::nullopt};
  if (minpoly.degree() == 1) {
    Rational q(-minpoly[0], minpoly[1]);
    q.canonicalize();
    orbit.roots.emplace_back(q);
    return orbit;
  }
  for (auto& iv : isolate_real_roots(minpoly)) orbit.roots.emplace_back(minpoly, iv, false);
  return orbit;
}

namespace detail {

/// Bits b such that a nonzero value of p at the point has |value| > 2^-b.
/// With c = den(p) * prod lc_i^(deg_i p), c * value is an algebraic integer of degree at most
/// D = prod deg(minpoly_i); its norm is a nonzero integer, and every conjugate is bounded by
/// M = c * sum |coef| * prod R_i^k_i (R_i Cauchy bounds), so |value| >= 1 / (c * M^(D-1)).
inline long separation_bits(std::span<const AlgebraicNumber> point, const MultiPoly& p) {
  Integer den = 1;
  for (auto& t : p.terms()) den = lcm(den, t.coef.get_den());
  Integer c = den;
  long D = 1;
  std::vector<long> rb(point.size(), 0);
  for (size_t i = 0; i < point.size(); ++i) {
    unsigned e = p.degree_in(i);
    if (e == 0) continue;
    c *= pow_int(point[i].minpoly().leading(), e);
    D *= point[i].degree();
    rb[i] = root_bound_log2(point[i].minpoly());
  }
  double log_m = log2_abs(Rational(c));
  double sum_bits = -1e300;
  for (auto& t : p.terms()) {
    double b = log2_abs(t.coef);
    for (size_t i = 0; i < point.size(); ++i) b += static_cast<double>(t.mono[i] * rb[i]);
    // log2(2^a + 2^b)
    sum_bits = sum_bits < b ? b + std::log2(1 + std::exp2(sum_bits - b)) : sum_bits + std::log2(1 + std::exp2(b - sum_bits));
  }
  log_m += sum_bits;
  double bits = log2_abs(Rational(c)) + static_cast<double>(D - 1) * std::max(0.0, log_m);
  return static_cast<long>(std::ceil(bits)) + 8;
}

}  // namespace detail

/// Exact sign of p at the point: interval evaluation under refinement, with zero declared
/// only once the enclosure straddles 0 and is narrower than the separation bound.
inline int sign_at(std::span<const AlgebraicNumber> point, const MultiPoly& p) {
  if (point.size() != p.num_vars()) fail(ErrorKind::VariableMismatch, "point arity differs from polynomial");
  MultiPoly q = p;
  for (size_t i = 0; i < point.size(); ++i)
    if (point[i].is_rational()) q = q.substitute(i, point[i].rational_value());
  if (q.is_constant() || q.is_zero()) return sgn(q.constant_term());
  long sep = detail::separation_bits(point, q);
  Rational zero_width = dyadic_pow2(-sep);
  for (long bits = 64;; bits *= 2) {
    std::vector<Interval> box;
    for (size_t i = 0; i < point.size(); ++i)
      box.push_back(q.involves(i) ? point[i].enclosure(bits) : Interval(Rational(0)));
    Interval v = evaluate(q, box);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    if (v.width() < zero_width) return 0;
  }
}

inline int sign_at(const std::vector<AlgebraicNumber>& point, const MultiPoly& p) {
  return sign_at(std::span<const AlgebraicNumber>(point), p);
}

struct RadicalExpr {
  Integer p, q, r;  // value = (p + s*sqrt(q))/r, q = 0 for a rational
  int s = 1;

  bool is_rational() const { return q == 0; }

  std::string to_string() const {
    if (is_rational()) {
      Rational v(p, r);
      v.canonicalize();
      return v.get_str();
    }
    return "(" + p.get_str() + " + " + std::to_string(s) + "*sqrt(" + q.get_str() + "))/" + r.get_str();
  }

  /// Rational within 2^-bits of the value.
  Rational approx(long bits) const {
    if (is_rational()) return Rational(p, r);
    Integer scaled = q * pow2(2 * (bits + 4)), root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rational sq = Rational(root) * dyadic_pow2(-(bits + 4));
    Rational v = (Rational(p) + s * sq) / Rational(r);
    v.canonicalize();
    return v;
  }
};

namespace detail {

/// n = k^2 * m with m free of small square factors; a leftover perfect square is folded into k.
inline void split_square(const Integer& n, Integer& k, Integer& m) {
  k = 1;
  m = n;
  for (unsigned long pr = 2; pr < 100000 && Integer(pr) * pr <= m; ++pr) {
    Integer sq = Integer(pr) * pr;
    while (mpz_divisible_p(m.get_mpz_t(), sq.get_mpz_t())) {
      m /= sq;
      k *= pr;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    k *= root;
    m = 1;
  }
}

}  // namespace detail

/// Closed form for degree <= 2.
inline RadicalExpr to_radicals(const AlgebraicNumber& a) {
  if (a.degree() > 2) fail(ErrorKind::DegreeTooHigh, "radical form only for degree <= 2");
  if (a.is_rational()) {
    Rational v = a.rational_value();
    return {v.get_num(), 0, v.get_den(), 1};
  }
  const auto& c = a.minpoly().coeffs();
  Integer A = c[2], B = c[1], C = c[0];
  Integer disc = B * B - 4 * A * C;
  Integer k, q;
  detail::split_square(disc, k, q);
  Integer twoA = 2 * A;
  Integer g = gcd(gcd(B, k), twoA);
  RadicalExpr e;
  e.p = -B / g;
  e.r = twoA / g;
  Integer kk = k / g;
  e.q = kk * kk * q;
  // larger root has +sqrt; compare against the midpoint -B/2A of the two roots
  Rational centre(-B, twoA);
  centre.canonicalize();
  e.s = a.compare(centre) > 0 ? 1 : -1;
  return e;
}

}  // namespace ipie
