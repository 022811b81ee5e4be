#pragma once

// Minimal polynomial reconstruction from a numerical approximation by lattice reduction.
// For degree k the lattice rows are [e_i | round(2^p * a^i)], i = 0..k; a short vector
// carries the coefficients of an integer relation among 1, a, ..., a^k.

#include <map>
#include <optional>

#include "factor.hpp"
#include "lattice.hpp"
#include "newton.hpp"
#include "unipoly.hpp"

namespace ipie {

struct KLLParams {
  long degree_bound = 2;   // d
  Integer height_bound = 1;  // H
  long precision_bits = 0;   // p; 0 means required_precision_bits(d, H)
  int height_doublings = 12;
  int degree_doublings = 2;
};

namespace detail {

/// Shortest-vector relation of degree <= k, as a polynomial (zero if none found).
inline UniPoly lattice_relation(const Rational& a, long k, long p) {
  IntegerLattice L;
  Rational scale = dyadic_pow2(p);
  Rational power = 1;
  for (long i = 0; i <= k; ++i) {
    std::vector<Integer> row(static_cast<size_t>(k + 2), Integer(0));
    row[static_cast<size_t>(i)] = 1;
    row.back() = round_rat(scale * power);
    L.basis.push_back(std::move(row));
    power *= a;
  }
  L = lll_reduce(std::move(L));
  upoly::ZVec c(L.basis[0].begin(), L.basis[0].end() - 1);
  upoly::trim(c);
  return UniPoly(c);
}

/// The irreducible factor of f closest to vanishing at a.
inline UniPoly best_factor(const UniPoly& f, const Rational& a) {
  std::optional<UniPoly> best;
  Rational best_val;
  for (auto& fac : factor_over_q(f)) {
    Rational v = abs_rat(fac.poly.evaluate(a)) / Rational(fac.poly.height());
    if (!best || v < best_val) {
      best = fac.poly;
      best_val = v;
    }
  }
  return *best;
}

}  // namespace detail

/// `accuracy_bits` bounds how many fractional bits of `approx` are meaningful; the lattice
/// scale never exceeds it.
inline UniPoly minimal_polynomial(const Rational& approx, const KLLParams& params,
                                  std::optional<long> accuracy_bits = std::nullopt) {
  if (params.degree_bound < 1 || params.height_bound < 1)
    fail(ErrorKind::InvalidArgument, "degree and height bounds must be >= 1");
  long p = params.precision_bits > 0 ? params.precision_bits
                                     : required_precision_bits(params.degree_bound, params.height_bound);
  if (accuracy_bits) p = std::min(p, *accuracy_bits);
  std::map<long, std::optional<UniPoly>> cache;
  auto candidate = [&](long k) -> const std::optional<UniPoly>& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    UniPoly rel = detail::lattice_relation(approx, k, p);
    std::optional<UniPoly> c;
    if (rel.degree() >= 1) c = detail::best_factor(rel, approx);
    return cache[k] = c;
  };
  long d = params.degree_bound;
  for (int dd = 0; dd <= params.degree_doublings; ++dd, d *= 2) {
    Integer H = params.height_bound;
    for (int hh = 0; hh <= params.height_doublings; ++hh, H *= 2) {
      for (long k = 1; k <= d; ++k) {
        const auto& c = candidate(k);
        if (!c || c->degree() > k) continue;
        if (c->height() > H) continue;
        Rational bound = Rational(Integer(c->degree() + 1) * H) * dyadic_pow2(-p / 2);
        if (abs_rat(c->evaluate(approx)) < bound) return *c;
      }
    }
  }
  fail(ErrorKind::ReconstructionFailed, "no minimal polynomial within the degree and height bounds");
}

/// The root of a degree-1 polynomial, if it is one.
inline std::optional<Rational> is_rational_root(const UniPoly& poly) {
  if (poly.degree() != 1) return std::nullopt;
  Rational q(-poly[0], poly[1]);
  q.canonicalize();
  return q;
}

}  // namespace ipie
