#pragma once

// Multivariate division, S-polynomials and Buchberger's algorithm under lex
// orders. Internally every polynomial is renamed into "ranked" coordinates,
// where the requested order is plain lex and the leading term is front().

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "unipoly.hpp"

namespace ipie {

struct DivisionResult {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

struct GroebnerBasis {
  std::vector<MultiPoly> generators;  // sorted by descending leading monomial
  MonomialOrder order;
  bool reduced = true;

  size_t num_vars() const { return order.num_vars(); }
  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
  bool is_zero_ideal() const { return generators.empty(); }
};

namespace detail {

inline const Monomial& lm(const MultiPoly& p) { return p.leading().mono; }

inline MultiPoly drop_leading(const MultiPoly& p) {
  return p - MultiPoly::term(p.leading().mono, p.leading().coef);
}

/// Full reduction of p modulo G, all in ranked coordinates.
inline MultiPoly normal_form_ranked(MultiPoly p, const std::vector<MultiPoly>& G) {
  MultiPoly r(p.num_vars());
  std::vector<MultiPoly::Term> rest;
  while (!p.is_zero()) {
    const auto& lt = p.leading();
    const MultiPoly* hit = nullptr;
    for (auto& g : G)
      if (divides(lm(g), lt.mono)) {
        hit = &g;
        break;
      }
    if (hit) {
      Rational c = lt.coef / hit->leading().coef;
      p = p.add_scaled(hit->mul_term(mono_div(lt.mono, lm(*hit)), c), Rational(-1));
    } else {
      rest.push_back(lt);
      p = drop_leading(p);
    }
  }
  return MultiPoly::from_terms(r.num_vars(), std::move(rest));
}

inline MultiPoly s_poly_ranked(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = mono_lcm(lm(f), lm(g));
  MultiPoly a = f.mul_term(mono_div(l, lm(f)), Rational(1) / f.leading().coef);
  MultiPoly b = g.mul_term(mono_div(l, lm(g)), Rational(1) / g.leading().coef);
  return a - b;
}

/// Interreduces a Groebner basis (ranked) into the unique reduced monic basis.
inline std::vector<MultiPoly> reduce_basis_ranked(std::vector<MultiPoly> G) {
  // drop generators whose leading monomial is a multiple of another's
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lm(G[j]), lm(G[i])) && (lm(G[j]) != lm(G[i]) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i].monic());
  }
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly tail = normal_form_ranked(drop_leading(minimal[i]), others);
    out.push_back(MultiPoly::term(lm(minimal[i]), Rational(1)) + tail);
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) { return lm(a) > lm(b); });
  return out;
}

inline std::vector<MultiPoly> buchberger_ranked(const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return G;
  for (auto& g : G)
    if (g.is_constant()) return {MultiPoly::constant(g.num_vars(), Rational(1))};

  std::deque<std::pair<size_t, size_t>> queue;
  std::set<std::pair<size_t, size_t>> pending;
  auto push_pair = [&](size_t i, size_t j) {
    queue.emplace_back(i, j);
    pending.emplace(i, j);
  };
  auto is_pending = [&](size_t a, size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    pending.erase({i, j});
    if (coprime(lm(G[i]), lm(G[j]))) continue;
    Monomial l = mono_lcm(lm(G[i]), lm(G[j]));
    bool chain = false;
    for (size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(lm(G[k]), l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    MultiPoly r = normal_form_ranked(s_poly_ranked(G[i], G[j]), G);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MultiPoly::constant(r.num_vars(), Rational(1))};
    G.push_back(r.monic());
    size_t n = G.size() - 1;
    for (size_t k = 0; k < n; ++k) push_pair(k, n);
  }
  return reduce_basis_ranked(std::move(G));
}

inline void check_arities(const std::vector<MultiPoly>& ps, const MonomialOrder& order) {
  for (auto& p : ps)
    if (p.num_vars() != order.num_vars()) fail(ErrorKind::VariableMismatch, "polynomial arity differs from order");
}

}  // namespace detail

/// f = sum q_i d_i + r, with no term of r divisible by any leading monomial of the divisors.
inline DivisionResult multivariate_divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                                          const MonomialOrder& order) {
  detail::check_arities({f}, order);
  detail::check_arities(divisors, order);
  std::vector<MultiPoly> D;
  for (auto& d : divisors) {
    if (d.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
    D.push_back(order.to_ranked(d));
  }
  size_t n = order.num_vars();
  std::vector<MultiPoly> Q(D.size(), MultiPoly(n));
  std::vector<MultiPoly::Term> rem;
  MultiPoly p = order.to_ranked(f);
  while (!p.is_zero()) {
    const auto lt = p.leading();
    bool divided = false;
    for (size_t i = 0; i < D.size(); ++i) {
      if (!divides(detail::lm(D[i]), lt.mono)) continue;
      Monomial m = mono_div(lt.mono, detail::lm(D[i]));
      Rational c = lt.coef / D[i].leading().coef;
      Q[i] += MultiPoly::term(m, c);
      p = p.add_scaled(D[i].mul_term(m, c), Rational(-1));
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      p = detail::drop_leading(p);
    }
  }
  DivisionResult out;
  for (auto& q : Q) out.quotients.push_back(order.from_ranked(q));
  out.remainder = order.from_ranked(MultiPoly::from_terms(n, std::move(rem)));
  return out;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "S-polynomial of zero");
  detail::check_arities({f, g}, order);
  return order.from_ranked(detail::s_poly_ranked(order.to_ranked(f), order.to_ranked(g)));
}

/// Leading monomial of p under `order`, in the original variable numbering.
inline Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  Monomial ranked = order.to_ranked(p).leading().mono;
  Monomial m(ranked.size());
  for (size_t r = 0; r < ranked.size(); ++r) m[order.precedence()[r]] = ranked[r];
  return m;
}

/// Reduced monic Groebner basis.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order) {
  detail::check_arities(gens, order);
  std::vector<MultiPoly> ranked;
  for (auto& g : gens) ranked.push_back(order.to_ranked(g));
  GroebnerBasis gb;
  gb.order = order;
  for (auto& g : detail::buchberger_ranked(ranked)) gb.generators.push_back(order.from_ranked(g));
  return gb;
}

/// Remainder of f on division by the basis (the normal form).
inline MultiPoly reduce(const MultiPoly& f, const GroebnerBasis& basis) {
  std::vector<MultiPoly> G;
  for (auto& g : basis.generators) G.push_back(basis.order.to_ranked(g));
  return basis.order.from_ranked(detail::normal_form_ranked(basis.order.to_ranked(f), G));
}

inline bool ideal_contains(const GroebnerBasis& basis, const MultiPoly& f) { return reduce(f, basis).is_zero(); }

/// Generator involving only `variable` (which must be lowest in the basis order).
inline UniPoly eliminate_to_univariate(const GroebnerBasis& basis, size_t variable) {
  if (variable >= basis.num_vars()) fail(ErrorKind::VariableMismatch, "variable index out of range");
  if (basis.order.lowest() != variable) fail(ErrorKind::InvalidArgument, "variable is not lowest in the basis order");
  if (basis.is_unit()) return UniPoly{1};
  for (auto& g : basis.generators) {
    auto vars = g.support();
    if (vars.size() == 1 && vars[0] == variable) return UniPoly::from_multipoly(g, variable);
  }
  fail(ErrorKind::NoUnivariate, "no univariate polynomial in the eliminated variable; the ideal is not zero-dimensional");
}

/// True iff every variable has a pure power as some leading monomial (finitely many solutions).
inline bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit()) return true;
  size_t n = basis.num_vars();
  std::vector<bool> has(n, false);
  for (auto& g : basis.generators) {
    Monomial m = leading_monomial(g, basis.order);
    size_t nz = 0, v = 0;
    for (size_t i = 0; i < n; ++i)
      if (m[i]) {
        ++nz;
        v = i;
      }
    if (nz == 1) has[v] = true;
  }
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

namespace detail {

/// Finds (v, c, h) with p = (x_v - c) * h, h nonconstant, by probing rational roots of a
/// random univariate specialization and confirming exactly.
inline std::optional<std::pair<size_t, Rational>> linear_factor(const MultiPoly& p, std::mt19937_64& rng) {
  if (p.total_degree() < 2) return std::nullopt;
  size_t n = p.num_vars();
  std::uniform_int_distribution<long> dist(-97, 97);
  for (size_t v : p.support()) {
    MultiPoly specialized = p;
    for (size_t u = 0; u < n; ++u)
      if (u != v) specialized = specialized.substitute(u, Rational(dist(rng)));
    if (specialized.is_zero() || specialized.degree_in(v) == 0) continue;
    for (auto& c : rational_roots(UniPoly::from_multipoly(specialized, v))) {
      if (!p.substitute(v, c).is_zero()) continue;
      return std::make_pair(v, c);
    }
  }
  return std::nullopt;
}

inline void split_components(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                             std::vector<GroebnerBasis>& out, std::mt19937_64& rng) {
  GroebnerBasis gb = buchberger(gens, order);
  if (gb.is_unit()) return;
  for (auto& g : gb.generators) {
    auto lf = linear_factor(g, rng);
    if (!lf) continue;
    size_t n = order.num_vars();
    MultiPoly lin = MultiPoly::variable(n, lf->first) - MultiPoly::constant(n, lf->second);
    MultiPoly h = multivariate_divide(g, {lin}, order).quotients[0];
    auto with_lin = gb.generators;
    with_lin.push_back(lin);
    split_components(with_lin, order, out, rng);
    auto with_h = gb.generators;
    with_h.push_back(h);
    split_components(with_h, order, out, rng);
    return;
  }
  for (auto& seen : out)
    if (seen.generators == gb.generators) return;
  out.push_back(std::move(gb));
}

}  // namespace detail

/// Binds `variable` to `value` (which must be a root of the basis's univariate in that variable)
/// and splits the resulting system along linear factors. Each returned basis is one piece of the
/// fibre; zero-dimensional pieces carry isolated points, others are positive-dimensional.
inline std::vector<GroebnerBasis> triangular_substitute(const GroebnerBasis& basis, size_t variable,
                                                        const Rational& value) {
  if (variable >= basis.num_vars()) fail(ErrorKind::VariableMismatch, "variable index out of range");
  size_t n = basis.num_vars();
  MultiPoly lin = MultiPoly::variable(n, variable) - MultiPoly::constant(n, value);
  auto gens = basis.generators;
  gens.push_back(lin);
  GroebnerBasis bound = buchberger(gens, basis.order);
  if (bound.is_unit()) fail(ErrorKind::NotARoot, to_string(value) + " is not a root of the eliminated polynomial");
  std::vector<GroebnerBasis> pieces;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  detail::split_components(bound.generators, basis.order, pieces, rng);
  return pieces;
}

/// All rational points of a zero-dimensional basis, by back substitution from the lowest variable.
inline std::vector<std::vector<Rational>> rational_points(const GroebnerBasis& basis) {
  if (!is_zero_dimensional(basis)) fail(ErrorKind::NoUnivariate, "rational_points needs a zero-dimensional basis");
  std::vector<std::vector<Rational>> out;
  if (basis.is_unit()) return out;
  size_t n = basis.num_vars();
  const auto& prec = basis.order.precedence();

  struct Partial {
    std::vector<MultiPoly> gens;
    std::vector<Rational> point;
  };
  std::vector<Partial> work{{basis.generators, std::vector<Rational>(n)}};
  for (size_t r = n; r-- > 0;) {
    size_t v = prec[r];
    std::vector<Partial> next;
    for (auto& w : work) {
      // the generator that only involves v once the bound variables are substituted
      std::optional<UniPoly> uni;
      for (auto& g : w.gens) {
        MultiPoly s = g;
        for (size_t q = r + 1; q < n; ++q) s = s.substitute(prec[q], w.point[prec[q]]);
        if (s.is_zero()) continue;
        auto sup = s.support();
        if (sup.empty()) {
          uni = UniPoly{1};
          break;
        }
        if (sup.size() == 1 && sup[0] == v) {
          UniPoly u = UniPoly::from_multipoly(s, v);
          if (!uni || u.degree() < uni->degree()) uni = u;
        }
      }
      if (!uni) fail(ErrorKind::NoUnivariate, "triangular structure broken during back substitution");
      if (uni->degree() <= 0) continue;
      for (auto& c : rational_roots(*uni)) {
        Partial p = w;
        p.point[v] = c;
        next.push_back(std::move(p));
      }
    }
    work = std::move(next);
  }
  for (auto& w : work) {
    bool ok = std::all_of(basis.generators.begin(), basis.generators.end(),
                          [&](const MultiPoly& g) { return g.evaluate(w.point) == 0; });
    if (ok) out.push_back(w.point);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Fibre {
  std::vector<std::vector<Rational>> isolated_points;  // rational points not on a positive-dimensional piece
  std::vector<GroebnerBasis> positive_dimensional;
};

inline Fibre rational_fibre(const GroebnerBasis& basis, size_t variable, const Rational& value) {
  Fibre f;
  std::vector<std::vector<Rational>> candidates;
  for (auto& piece : triangular_substitute(basis, variable, value)) {
    if (is_zero_dimensional(piece)) {
      for (auto& p : rational_points(piece)) candidates.push_back(p);
    } else {
      f.positive_dimensional.push_back(piece);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto& p : candidates) {
    bool on_curve = std::any_of(f.positive_dimensional.begin(), f.positive_dimensional.end(), [&](auto& piece) {
      return std::all_of(piece.generators.begin(), piece.generators.end(),
                         [&](const MultiPoly& g) { return g.evaluate(p) == 0; });
    });
    if (!on_curve) f.isolated_points.push_back(p);
  }
  return f;
}

}  // namespace ipie
