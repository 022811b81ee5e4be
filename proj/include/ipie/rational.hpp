#pragma once

// Big integer / rational helpers on top of GMP's C++ interface.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace ipie {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
  r.canonicalize();
  return r;
}

inline Integer pow2(long e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

/// 2^e as a rational; e may be negative.
inline Rational dyadic_pow2(long e) {
  if (e >= 0) return Rational(pow2(e));
  Rational r(Integer(1), pow2(-e));
  return r;
}

/// Number of bits of |z| (0 for z = 0).
inline long bit_length(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

inline Integer floor_rat(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Integer ceil_rat(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

/// Round to the nearest multiple of 2^-bits (ties up).
inline Rational round_dyadic(const Rational& x, long bits) {
  Rational r = Rational(floor_rat(x * dyadic_pow2(bits) + Rational(1, 2))) * dyadic_pow2(-bits);
  r.canonicalize();
  return r;
}

inline Rational floor_dyadic(const Rational& x, long bits) {
  Rational r = Rational(floor_rat(x * dyadic_pow2(bits))) * dyadic_pow2(-bits);
  r.canonicalize();
  return r;
}

inline Rational ceil_dyadic(const Rational& x, long bits) {
  Rational r = Rational(ceil_rat(x * dyadic_pow2(bits))) * dyadic_pow2(-bits);
  r.canonicalize();
  return r;
}

inline Integer round_rat(const Rational& x) { return floor_rat(x + Rational(1, 2)); }

/// Upper bound on log2|x| (x != 0); exact enough for precision bookkeeping.
inline double log2_abs(const Rational& x) {
  if (x == 0) return -1e300;
  long e_num = 0, e_den = 0;
  double m_num = mpz_get_d_2exp(&e_num, x.get_num().get_mpz_t());
  double m_den = mpz_get_d_2exp(&e_den, x.get_den().get_mpz_t());
  return std::log2(std::fabs(m_num)) + static_cast<double>(e_num) - std::log2(std::fabs(m_den)) -
         static_cast<double>(e_den);
}

inline double to_double(const Rational& x) { return x.get_d(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact parse of "p", "p/q", "-1.25", "3e-2".
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) return std::nullopt;
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Integer n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
      if (d == 0) return std::nullopt;
      Rational q(n, d);
      q.canonicalize();
      return q;
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
      exp10 = std::stol(s.substr(epos + 1));
      s = s.substr(0, epos);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
      if (c < '0' || c > '9') return std::nullopt;
    Integer n(digits, 10);
    Rational q(n);
    Integer ten = 10;
    if (exp10 > 0) q *= Rational(pow_int(ten, static_cast<unsigned long>(exp10)));
    if (exp10 < 0) q /= Rational(pow_int(ten, static_cast<unsigned long>(-exp10)));
    if (neg) q = -q;
    q.canonicalize();
    return q;
  } catch (...) {
    return std::nullopt;
  }
}

/// Number of fractional bits a decimal literal reliably carries (half-ulp of its last digit).
inline long decimal_accuracy_bits(std::string_view text) {
  std::string s(text);
  auto epos = s.find_first_of("eE");
  long exp10 = 0;
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  long frac_digits = dot == std::string::npos ? 0 : static_cast<long>(s.size() - dot - 1);
  frac_digits -= exp10;
  return static_cast<long>(std::floor(static_cast<double>(frac_digits) * std::log2(10.0))) + 1;
}

/// Decimal rendering of x with `digits` digits after the point, rounding half to even.
inline std::string to_decimal(const Rational& x, int digits) {
  Integer scale = pow_int(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = x * Rational(scale);
  Integer fl = floor_rat(scaled);
  Rational frac = scaled - Rational(fl);
  Integer r = fl;
  if (frac > Rational(1, 2) || (frac == Rational(1, 2) && mpz_odd_p(fl.get_mpz_t()))) r += 1;
  bool neg = r < 0;
  if (neg) r = -r;
  std::string s = r.get_str();
  if (digits > 0) {
    if (static_cast<long>(s.size()) <= digits) s = std::string(static_cast<size_t>(digits) + 1 - s.size(), '0') + s;
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return (neg ? "-" : "") + s;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs_rat(const Rational& a) { return a < 0 ? Rational(-a) : a; }

}  // namespace ipie
