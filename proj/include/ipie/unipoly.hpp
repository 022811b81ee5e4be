#pragma once

// Exact univariate polynomials: integer normal form, Euclidean tools,
// square-free decomposition, Sturm sequences and real-root isolation.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace ipie {

namespace upoly {

// Coefficient vectors, low degree first, no trailing zeros (zero polynomial = empty).
using ZVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

template <class V>
void trim(V& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class V>
int deg(const V& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class V>
V add(const V& a, const V& b) {
  V r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class V>
V sub(const V& a, const V& b) {
  V r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class V>
V mul(const V& a, const V& b) {
  if (a.empty() || b.empty()) return {};
  V r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

template <class V, class S>
V scale(const V& a, const S& s) {
  V r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  trim(r);
  return r;
}

template <class V>
V derivative(const V& a) {
  if (a.size() <= 1) return {};
  V r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

inline QVec to_q(const ZVec& a) { return QVec(a.begin(), a.end()); }

/// Horner evaluation at a rational point.
template <class V>
Rational eval(const V& a, const Rational& x) {
  Rational r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + Rational(a[i]);
  return r;
}

/// Sign of a(x) for x = n/d without building the rational value: d^deg * a(n/d).
inline int sign_at(const ZVec& a, const Rational& x) {
  if (a.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = 0, dpow = 1;
  // sum a_i n^i d^(deg-i), Horner in n with powers of d
  acc = a.back();
  for (size_t i = a.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + a[i] * dpow;
  }
  return sgn(acc);
}

/// Quotient and remainder over Q.
inline std::pair<QVec, QVec> divmod(QVec a, const QVec& b) {
  if (b.empty()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QVec q(a.size() - b.size() + 1);
  Rational inv_lc = Rational(1) / b.back();
  for (int i = deg(a); i >= deg(b); --i) {
    Rational c = a[static_cast<size_t>(i)] * inv_lc;
    size_t shift = static_cast<size_t>(i - deg(b));
    q[shift] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

inline Integer content(const ZVec& a) {
  Integer g = 0;
  for (auto& c : a) g = gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient.
inline ZVec primitive(const ZVec& a) {
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

/// Clears denominators by a positive factor, then takes the primitive part (sign of lc kept).
inline ZVec integral_primitive_keep_sign(const QVec& a) {
  if (a.empty()) return {};
  Integer den = 1;
  for (auto& c : a) den = lcm(den, c.get_den());
  ZVec z(a.size());
  for (size_t i = 0; i < a.size(); ++i) z[i] = a[i].get_num() * (den / a[i].get_den());
  Integer g = content(z);
  for (auto& c : z) c /= g;
  return z;
}

inline ZVec integral_primitive(const QVec& a) { return primitive(integral_primitive_keep_sign(a)); }

/// Exact quotient over Z; the caller guarantees b | a.
inline ZVec exact_div(const ZVec& a, const ZVec& b) {
  auto [q, r] = divmod(to_q(a), to_q(b));
  if (!r.empty()) fail(ErrorKind::InvalidArgument, "polynomial division is not exact");
  ZVec z(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i])) fail(ErrorKind::InvalidArgument, "quotient is not integral");
    z[i] = q[i].get_num();
  }
  return z;
}

inline bool divides_exactly(const ZVec& b, const ZVec& a) {
  auto [q, r] = divmod(to_q(a), to_q(b));
  return r.empty();
}

/// gcd over Z[x], primitive with positive leading coefficient.
inline ZVec gcd(ZVec a, ZVec b) {
  a = primitive(a);
  b = primitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto [q, r] = divmod(to_q(a), to_q(b));
    a = std::move(b);
    b = integral_primitive(r);
  }
  return primitive(a);
}

/// p(a*x + b) for rational a, b.
inline QVec compose_linear(const QVec& p, const Rational& a, const Rational& b) {
  QVec result;
  QVec lin{b, a};
  for (size_t i = p.size(); i-- > 0;) {
    result = mul(result, lin);
    result = add(result, QVec{p[i]});
  }
  return result;
}

}  // namespace upoly

/// Primitive integer polynomial with positive leading coefficient (or zero).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(upoly::ZVec coeffs) : c_(std::move(coeffs)) {
    upoly::trim(c_);
    c_ = upoly::primitive(c_);
  }
  UniPoly(std::initializer_list<long> coeffs_low_to_high) {
    for (long v : coeffs_low_to_high) c_.emplace_back(v);
    upoly::trim(c_);
    c_ = upoly::primitive(c_);
  }

  static UniPoly from_rational(const upoly::QVec& q) {
    upoly::QVec t = q;
    upoly::trim(t);
    return UniPoly(upoly::integral_primitive(t));
  }

  /// The polynomial must involve only `var`.
  static UniPoly from_multipoly(const MultiPoly& p, size_t var) {
    upoly::QVec q;
    for (auto& t : p.terms()) {
      for (size_t v = 0; v < p.num_vars(); ++v)
        if (v != var && t.mono[v] != 0) fail(ErrorKind::InvalidArgument, "polynomial is not univariate");
      size_t e = t.mono[var];
      if (q.size() <= e) q.resize(e + 1);
      q[e] += t.coef;
    }
    return from_rational(q);
  }

  MultiPoly to_multipoly(size_t num_vars, size_t var) const {
    std::vector<MultiPoly::Term> terms;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Monomial m(num_vars, 0);
      m[var] = static_cast<Exponent>(i);
      terms.push_back({m, Rational(c_[i])});
    }
    return MultiPoly::from_terms(num_vars, std::move(terms));
  }

  const upoly::ZVec& coeffs() const { return c_; }
  int degree() const { return upoly::deg(c_); }
  bool is_zero() const { return c_.empty(); }
  const Integer& leading() const { return c_.back(); }
  const Integer& operator[](size_t i) const { return c_[i]; }

  Rational evaluate(const Rational& x) const { return upoly::eval(c_, x); }
  int sign_at(const Rational& x) const { return upoly::sign_at(c_, x); }

  Integer height() const {
    Integer h = 0;
    for (auto& c : c_) h = std::max(h, abs_int(c));
    return h;
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator<(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) { return UniPoly(upoly::mul(a.c_, b.c_)); }

  /// Canonical text, e.g. "5*x^2 - 16*x + 9".
  std::string to_string(const std::string& var = "x") const {
    std::vector<std::string> names{var};
    return to_multipoly(1, 0).to_string(names);
  }

  /// "[9, -16, 5]" (low to high).
  std::string coeff_list() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].get_str();
    return s + "]";
  }

 private:
  upoly::ZVec c_;
};

struct IsolatingInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool operator==(const IsolatingInterval&) const = default;
};

// ---------------------------------------------------------------------------

inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "squarefree_part of zero");
  auto g = upoly::gcd(p.coeffs(), upoly::derivative(p.coeffs()));
  return UniPoly(upoly::exact_div(p.coeffs(), g));
}

inline bool is_squarefree(const UniPoly& p) {
  return upoly::deg(upoly::gcd(p.coeffs(), upoly::derivative(p.coeffs()))) == 0;
}

/// Yun's algorithm: p = c * prod f_i^i with f_i square-free and pairwise coprime.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  using namespace upoly;
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  QVec f = to_q(p.coeffs());
  QVec fp = derivative(f);
  QVec a = to_q(upoly::gcd(p.coeffs(), integral_primitive(fp)));
  QVec b = divmod(f, a).first;
  QVec c = divmod(fp, a).first;
  QVec d = sub(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    QVec g = to_q(upoly::gcd(integral_primitive(b), integral_primitive(d)));
    if (deg(g) > 0) out.emplace_back(UniPoly::from_rational(g), i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = sub(c, derivative(b));
  }
  return out;
}

/// Cauchy bound rounded up to a power of two: every root has |r| < 2^k.
inline long root_bound_log2(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_rat(Rational(p[static_cast<size_t>(i)], p.leading())));
  Rational b = m + 1;
  long k = 0;
  while (Rational(pow2(k)) <= b) ++k;
  return k;
}

class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p) {
    using namespace upoly;
    QVec a = to_q(p.coeffs());
    QVec b = derivative(a);
    seq_.push_back(integral_primitive_keep_sign(a));
    while (!b.empty()) {
      seq_.push_back(integral_primitive_keep_sign(b));
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = scale(r, Rational(-1));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (auto& s : seq_) {
      int sg = upoly::sign_at(s, x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  /// Sign variations at +infinity / -infinity.
  int variations_at_infinity(bool positive) const {
    int count = 0, prev = 0;
    for (auto& s : seq_) {
      int sg = sgn(s.back());
      if (!positive && (s.size() % 2 == 0)) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

 private:
  std::vector<upoly::ZVec> seq_;
};

/// Number of distinct real roots in the open interval (lo, hi).
inline int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "sturm_count of zero");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) fail(ErrorKind::EndpointIsRoot, "interval endpoint is a root");
  if (lo >= hi) return 0;
  SturmSequence s(p);
  return s.variations(lo) - s.variations(hi);
}

inline int count_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  SturmSequence s(p);
  return s.variations_at_infinity(false) - s.variations_at_infinity(true);
}

namespace detail {

/// Shrinks a root-containing point into an isolating interval (mid - eps, mid + eps).
inline IsolatingInterval isolate_exact_root(const UniPoly& p, const SturmSequence& s, const Rational& root,
                                            const Rational& half_width) {
  Rational eps = half_width;
  while (true) {
    Rational lo = root - eps, hi = root + eps;
    if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0 && s.variations(lo) - s.variations(hi) == 1) return {lo, hi};
    eps /= 2;
  }
}

}  // namespace detail

/// Disjoint isolating intervals with dyadic endpoints, ascending.
inline std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "isolate_real_roots of zero");
  if (!is_squarefree(p)) fail(ErrorKind::NotSquareFree, "polynomial is not square-free: " + p.to_string());
  std::vector<IsolatingInterval> out;
  if (p.degree() <= 0) return out;
  SturmSequence s(p);
  long k = root_bound_log2(p);
  struct Work {
    Rational lo, hi;
    int count;
  };
  Rational lo0 = -Rational(pow2(k)), hi0 = Rational(pow2(k));
  int total = s.variations(lo0) - s.variations(hi0);
  std::vector<Work> stack{{lo0, hi0, total}};
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      out.push_back({w.lo, w.hi});
      continue;
    }
    Rational mid = (w.lo + w.hi) / 2;
    if (p.sign_at(mid) == 0) {
      Rational quarter = (w.hi - w.lo) / 4;
      auto iv = detail::isolate_exact_root(p, s, mid, quarter);
      out.push_back(iv);
      int left = s.variations(w.lo) - s.variations(iv.lo);
      int right = s.variations(iv.hi) - s.variations(w.hi);
      stack.push_back({iv.hi, w.hi, right});
      stack.push_back({w.lo, iv.lo, left});
      continue;
    }
    int left = s.variations(w.lo) - s.variations(mid);
    stack.push_back({mid, w.hi, w.count - left});
    stack.push_back({w.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
  return out;
}

/// Bisects an isolating interval of a square-free p until its width is at most `max_width`.
/// An exact rational root hit on the way collapses the interval around it.
inline IsolatingInterval refine_interval(const UniPoly& p, IsolatingInterval iv, const Rational& max_width) {
  int slo = p.sign_at(iv.lo);
  while (iv.width() > max_width) {
    Rational mid = iv.midpoint();
    int sm = p.sign_at(mid);
    if (sm == 0) {
      Rational half = max_width / 4;
      return {mid - half, mid + half};
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

/// Rational roots (distinct), ascending. A root n/d in lowest terms has d | lc, so after
/// isolating to width < 1/(2 lc) the only candidate in each interval is round(lc * mid)/lc.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "rational_roots of zero");
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UniPoly f = squarefree_part(p);
  Integer lc = f.leading();
  for (auto iv : isolate_real_roots(f)) {
    iv = refine_interval(f, iv, Rational(Integer(1), 4 * lc));
    Integer m = round_rat(iv.midpoint() * Rational(lc));
    Rational cand(m, lc);
    cand.canonicalize();
    if (iv.lo <= cand && cand <= iv.hi && f.sign_at(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace ipie
