#pragma once

// Factorization over Q: square-free decomposition, then for each square-free
// part a small-prime modular factorization (distinct degree + Cantor-Zassenhaus),
// linear Hensel lifting and exhaustive factor recombination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace ipie {

namespace modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low degree first, trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline Poly from_z(const upoly::ZVec& z, u64 p) {
  Poly r(z.size());
  Integer pz(static_cast<unsigned long>(p));
  for (size_t i = 0; i < z.size(); ++i) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), z[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, u64 s, u64 p) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  if (b.empty()) fail(ErrorKind::InvalidArgument, "mod-p division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  u64 il = inv(b.back(), p);
  for (size_t i = a.size(); i-- >= b.size();) {
    u64 c = mulmod(a[i], il, p);
    size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c != 0)
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
    if (i == 0) break;
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// s*a + t*b = gcd (monic).
inline void ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly ns = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
    Poly nt = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  u64 il = inv(r0.back(), p);
  s = scale(s0, il, p);
  t = scale(t0, il, p);
}

inline Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

/// base^e mod m, e given as an arbitrary precision integer.
inline Poly powmod(Poly base, Integer e, const Poly& m, u64 p) {
  Poly result{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

/// Distinct-degree factorization of a monic square-free f: pairs (product of degree-d factors, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x{0, 1};
  Poly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e = (pow_int(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    Poly a(static_cast<size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    Poly h = gcd(g, b, p);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(h, d, p, rng, out);
      equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<Poly> factor_squarefree(const Poly& f_monic, u64 p) {
  std::mt19937_64 rng(0x1b873593ULL ^ p);
  std::vector<Poly> out;
  for (auto& [g, d] : distinct_degree(f_monic, p)) equal_degree(g, d, p, rng, out);
  return out;
}

}  // namespace modp

namespace detail {

inline std::vector<unsigned long> small_primes(unsigned long limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return primes;
}

/// Symmetric residue of each coefficient modulo m.
inline upoly::ZVec symmetric_mod(const upoly::ZVec& a, const Integer& m) {
  upoly::ZVec r(a.size());
  Integer half = m / 2;
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  upoly::trim(r);
  return r;
}

inline upoly::ZVec mod_poly(const upoly::ZVec& a, const Integer& m) {
  upoly::ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  upoly::trim(r);
  return r;
}

inline upoly::ZVec lift_z(const modp::Poly& a) {
  upoly::ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

/// Given h = u0 * w0 (mod p) with u0 monic and coprime to w0, lifts to h = u * w (mod p^l)
/// with u monic and lc(w) = lc(h).
inline std::pair<upoly::ZVec, upoly::ZVec> hensel_lift(const upoly::ZVec& h, const modp::Poly& u0,
                                                       const modp::Poly& w0, unsigned long p, int l) {
  using namespace upoly;
  modp::Poly s, t;
  modp::ext_gcd(u0, w0, p, s, t);
  ZVec u = lift_z(u0), w = lift_z(w0);
  w.back() = h.back();
  Integer pk = static_cast<unsigned long>(p);
  Integer pl = pow_int(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(l));
  for (int k = 1; k < l; ++k) {
    ZVec diff = sub(h, mul(u, w));
    for (auto& c : diff) c /= pk;  // exact
    modp::Poly e = modp::from_z(diff, p);
    if (!e.empty()) {
      modp::Poly du = modp::rem(modp::mul(t, e, p), u0, p);
      modp::Poly dw = modp::divmod(modp::sub(e, modp::mul(w0, du, p), p), u0, p).first;
      u = add(u, scale(lift_z(du), pk));
      w = add(w, scale(lift_z(dw), pk));
    }
    pk *= static_cast<unsigned long>(p);
    u = mod_poly(u, pl);
    ZVec wr = mod_poly(w, pl);
    wr.resize(w.size());
    wr.back() = h.back();
    w = wr;
  }
  return {u, w};
}

/// Factors a primitive square-free polynomial of degree >= 2 with nonzero constant term.
inline std::vector<upoly::ZVec> zassenhaus(const upoly::ZVec& g) {
  using namespace upoly;
  const int n = deg(g);
  static const std::vector<unsigned long> primes = small_primes(20000);
  const Integer& lc = g.back();

  // Pick the prime with the fewest modular factors among the first few admissible ones.
  unsigned long best_p = 0;
  size_t best_count = 0;
  int tried = 0;
  for (unsigned long p : primes) {
    if (p == 2) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    modp::Poly gp = modp::from_z(g, p);
    if (static_cast<int>(gp.size()) - 1 != n) continue;
    if (modp::gcd(gp, modp::derivative(gp, p), p).size() != 1) continue;
    size_t count = 0;
    for (auto& [f, d] : modp::distinct_degree(modp::monic(gp, p), p)) count += (f.size() - 1) / static_cast<size_t>(d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1 || ++tried >= 6) break;
  }
  if (best_p == 0) fail(ErrorKind::InvalidArgument, "no admissible prime for factorization");
  const unsigned long p = best_p;
  if (best_count == 1) return {g};

  std::vector<modp::Poly> mod_factors = modp::factor_squarefree(modp::monic(modp::from_z(g, p), p), p);
  std::sort(mod_factors.begin(), mod_factors.end());

  // Coefficient bound for lc * (any factor of g).
  Integer norm2sq = 0;
  for (auto& c : g) norm2sq += c * c;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;
  Integer bound = pow2(n) * norm2 * abs_int(lc);
  int l = 1;
  Integer pl = static_cast<unsigned long>(p);
  while (pl <= 2 * bound) {
    pl *= static_cast<unsigned long>(p);
    ++l;
  }

  // Multifactor lifting by peeling one factor at a time.
  std::vector<ZVec> lifted;
  ZVec current = g;
  for (size_t i = 0; i + 1 < mod_factors.size(); ++i) {
    modp::Poly rest{modp::from_z(ZVec{current.back()}, p)};
    for (size_t j = i + 1; j < mod_factors.size(); ++j) rest = modp::mul(rest, mod_factors[j], p);
    auto [u, w] = hensel_lift(current, mod_factors[i], rest, p, l);
    lifted.push_back(u);
    current = w;
  }
  {
    // monic version of the last cofactor modulo p^l
    Integer inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), current.back().get_mpz_t(), pl.get_mpz_t());
    lifted.push_back(mod_poly(scale(current, inv_lc), pl));
  }

  // Recombination.
  std::vector<ZVec> factors;
  std::vector<size_t> remaining(lifted.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZVec G = g;
  size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZVec cand{G.back()};
      for (size_t i : idx) cand = mod_poly(mul(cand, lifted[remaining[i]]), pl);
      cand = primitive(symmetric_mod(cand, pl));
      if (deg(cand) > 0 && divides_exactly(cand, G)) {
        ZVec q = exact_div(G, cand);
        factors.push_back(cand);
        G = primitive(q);
        std::vector<size_t> next;
        for (size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
        remaining = next;
        found = true;
        break;
      }
      // next combination
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[static_cast<size_t>(k)] == remaining.size() - s + static_cast<size_t>(k)) --k;
      if (k < 0) break;
      ++idx[static_cast<size_t>(k)];
      for (size_t j = static_cast<size_t>(k) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (deg(G) > 0) factors.push_back(G);
  return factors;
}

inline std::vector<UniPoly> factor_squarefree_z(const UniPoly& f) {
  std::vector<UniPoly> out;
  if (f.degree() <= 0) return out;
  upoly::ZVec c = f.coeffs();
  if (c[0] == 0) {  // square-free, so x divides exactly once
    out.emplace_back(UniPoly{0, 1});
    c.erase(c.begin());
    upoly::trim(c);
    if (upoly::deg(c) <= 0) return out;
  }
  UniPoly g(c);
  if (g.degree() == 1) {
    out.push_back(g);
    return out;
  }
  if (g.degree() == 2) {
    Integer disc = g[1] * g[1] - 4 * g[0] * g[2], s;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) {
      out.push_back(g);
      return out;
    }
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    // a x^2 + b x + c = (2a x + b - s)(2a x + b + s) / 4a
    out.emplace_back(upoly::ZVec{g[1] - s, 2 * g[2]});
    out.emplace_back(upoly::ZVec{g[1] + s, 2 * g[2]});
    return out;
  }
  if (g.degree() <= 3) {  // reducible iff it has a rational root
    auto roots = rational_roots(g);
    if (roots.empty()) {
      out.push_back(g);
      return out;
    }
    upoly::ZVec rest = g.coeffs();
    for (auto& r : roots) {
      upoly::ZVec lin{-r.get_num(), r.get_den()};
      out.emplace_back(lin);
      rest = upoly::exact_div(rest, lin);
    }
    if (upoly::deg(rest) > 0) out.emplace_back(rest);
    return out;
  }
  for (auto& z : zassenhaus(g.coeffs())) out.emplace_back(z);
  return out;
}

}  // namespace detail

struct Factor {
  UniPoly poly;
  int multiplicity;
  bool operator==(const Factor&) const = default;
};

/// Irreducible factors over Q with multiplicities, sorted by (degree, coefficients).
inline std::vector<Factor> factor_over_q(const UniPoly& p) {
  if (p.degree() < 1) fail(ErrorKind::InvalidArgument, "factor_over_q needs a nonconstant polynomial");
  std::vector<Factor> out;
  for (auto& [sqf, mult] : squarefree_decomposition(p))
    for (auto& f : detail::factor_squarefree_z(sqf)) out.push_back({f, mult});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    // low coefficients first, smaller magnitude first, negative before positive
    for (size_t i = 0; i < a.poly.coeffs().size(); ++i) {
      const Integer &x = a.poly[i], &y = b.poly[i];
      if (abs_int(x) != abs_int(y)) return abs_int(x) < abs_int(y);
      if (x != y) return x < y;
    }
    return false;
  });
  return out;
}

inline bool is_irreducible(const UniPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_over_q(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace ipie
