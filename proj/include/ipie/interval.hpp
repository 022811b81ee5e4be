#pragma once

// Closed rational intervals. Endpoints are exact, so enclosures are rigorous;
// `widen_dyadic` rounds outward to keep denominators bounded.

#include <algorithm>
#include <span>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"

namespace ipie {

struct Interval {
  Rational lo, hi;

  Interval() = default;
  explicit Interval(const Rational& x) : lo(x), hi(x) {}
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational mag() const { return std::max(abs_rat(lo), abs_rat(hi)); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// this lies in the open interior of o
  bool strictly_inside(const Interval& o) const { return o.lo < lo && hi < o.hi; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  }
  friend Interval operator*(const Rational& s, const Interval& a) {
    return s >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
  }
};

inline Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

inline Interval pow(const Interval& x, unsigned e) {
  if (e == 0) return Interval(Rational(1));
  Interval r = x;
  for (unsigned i = 1; i < e; ++i) r = r * x;
  if (e % 2 == 0 && x.contains_zero()) r.lo = 0;  // even powers are nonnegative
  return r;
}

/// Outward rounding to multiples of 2^-bits.
inline Interval widen_dyadic(const Interval& x, long bits) { return {floor_dyadic(x.lo, bits), ceil_dyadic(x.hi, bits)}; }

/// Enclosure of p over a box (natural interval extension, term by term).
inline Interval evaluate(const MultiPoly& p, std::span<const Interval> box) {
  if (box.size() != p.num_vars()) fail(ErrorKind::VariableMismatch, "box arity");
  Interval acc(Rational(0));
  std::vector<std::vector<Interval>> powers(box.size());
  for (auto& t : p.terms()) {
    Interval term(t.coef);
    for (size_t v = 0; v < box.size(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      while (pw.size() <= e) pw.push_back(pow(box[v], static_cast<unsigned>(pw.size())));
      term = term * pw[e];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace ipie
