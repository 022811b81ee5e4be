#pragma once

// Equilibrium pipeline: a Newton + lattice-reduction sample solution, expansion over the
// Galois orbits of its coordinates with Krawczyk certification, equilibrium filtering, and
// the rational-root membership test.

#include <functional>
#include <optional>
#include <vector>

#include "algebraic.hpp"
#include "certify.hpp"
#include "factor.hpp"
#include "game.hpp"
#include "groebner.hpp"
#include "kll.hpp"
#include "newton.hpp"
#include "realsolve.hpp"

namespace ipie {

struct SolverOptions {
  std::optional<long> precision_bits;  // Newton target; default 2 * required_precision_bits(d, H)
  std::optional<long> degree_bound;    // default: Bezout bound of the system
  std::optional<Integer> height_bound;  // default: largest coefficient magnitude
  NewtonOptions newton{};
  int max_deflations = 32;
};

struct SampleSolution {
  std::vector<AlgebraicNumber> coords;
  std::vector<std::pair<size_t, Rational>> deflated_factors;
};

struct SolutionSet {
  std::vector<std::vector<AlgebraicNumber>> tuples;
  std::vector<MixedProfile> equilibria;
  std::vector<std::optional<std::vector<RadicalExpr>>> radicals;  // parallel to equilibria
  size_t candidates_examined = 0;
};

namespace detail {

inline long bezout_bound(const std::vector<MultiPoly>& system) {
  long d = 1;
  for (auto& p : system) d *= std::max<long>(1, p.total_degree());
  return d;
}

inline Integer coefficient_height(const std::vector<MultiPoly>& system) {
  Integer h = 1;
  for (auto& p : system) {
    if (p.is_zero()) continue;
    Rational m = p.primitive().max_abs_coefficient();
    if (m.get_num() > h) h = m.get_num();
  }
  return h;
}

/// The conjugate of `mp` closest to the Newton value.
inline AlgebraicNumber nearest_root(const UniPoly& mp, const Rational& x, long bits) {
  auto roots = conjugates(mp).roots;
  if (roots.empty()) fail(ErrorKind::ReconstructionFailed, "reconstructed polynomial " + mp.to_string() + " has no real root");
  size_t best = 0;
  Rational best_dist;
  for (size_t i = 0; i < roots.size(); ++i) {
    Rational d = abs_rat(roots[i].approx(bits) - x);
    if (i == 0 || d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return roots[best];
}

/// Decides NotIPIE versus DidNotConverge once Newton has no start left.
[[noreturn]] inline void exhausted(const std::vector<MultiPoly>& system) {
  size_t n = system.empty() ? 0 : system[0].num_vars();
  for (auto& s : real_solutions(system, n)) {
    bool irrational = std::none_of(s.begin(), s.end(), [](const AlgebraicNumber& a) { return a.is_rational(); });
    if (irrational) fail(ErrorKind::DidNotConverge, "an all-irrational solution exists but Newton did not reach it");
  }
  fail(ErrorKind::NotIPIE, "every real solution of the system has a rational coordinate");
}

}  // namespace detail

/// Sample solution of a square polynomial system with every coordinate irrational.
inline SampleSolution sample_solution(const std::vector<MultiPoly>& system, const SolverOptions& opt = {}) {
  NewtonSystem ns(system);
  long d = opt.degree_bound.value_or(detail::bezout_bound(system));
  Integer H = opt.height_bound.value_or(detail::coefficient_height(system));
  long target = opt.precision_bits.value_or(2 * required_precision_bits(d, H));
  KLLParams kp;
  kp.degree_bound = d;
  kp.height_bound = H;

  SampleSolution out;
  for (int round = 0; round <= opt.max_deflations; ++round) {
    BigFloatVector x;
    try {
      x = multi_start(ns, target, opt.newton);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AllStartsFailed) throw;
      detail::exhausted(system);
    }
    std::vector<UniPoly> mps;
    bool deflated = false;
    for (size_t v = 0; v < x.size(); ++v) {
      UniPoly mp = minimal_polynomial(x.coords[v], kp, target);
      if (auto r = is_rational_root(mp)) {
        ns.add_deflation(v, *r);
        out.deflated_factors.emplace_back(v, *r);
        deflated = true;
      }
      mps.push_back(std::move(mp));
    }
    if (deflated) continue;
    out.coords.clear();
    for (size_t v = 0; v < x.size(); ++v) out.coords.push_back(detail::nearest_root(mps[v], x.coords[v], target / 2));
    for (auto& p : system)
      if (sign_at(out.coords, p) != 0)
        fail(ErrorKind::ReconstructionFailed, "reconstructed tuple does not solve the system exactly");
    return out;
  }
  fail(ErrorKind::DidNotConverge, "deflation budget exhausted");
}

/// Sample solution of the game's indifference system.
inline SampleSolution sample_solution(const Game& g, const SolverOptions& opt = {}) {
  if (!g.integral()) fail(ErrorKind::NonIntegerPayoff, "payoffs must be integers");
  return sample_solution(build_game_system(g, SystemForm::Indifference).polynomials, opt);
}

/// Cartesian product of the coordinates' real conjugates, each candidate certified by the
/// Krawczyk test or, failing that, by exact vanishing of the system.
inline SolutionSet orbit_expand(const SampleSolution& sample, const std::vector<MultiPoly>& system) {
  SolutionSet out;
  std::vector<std::vector<AlgebraicNumber>> orbits;
  for (auto& c : sample.coords) orbits.push_back(conjugates(c.minpoly()).roots);
  std::vector<AlgebraicNumber> point;
  auto visit = [&](auto&& self, size_t v) -> void {
    if (v == orbits.size()) {
      ++out.candidates_examined;
      bool ok = false;
      try {
        ok = certify_box(system, box_around(point, 40));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularOnBox) throw;
      }
      if (!ok)
        ok = std::all_of(system.begin(), system.end(), [&](const MultiPoly& p) { return sign_at(point, p) == 0; });
      if (ok) out.tuples.push_back(point);
      return;
    }
    for (auto& r : orbits[v]) {
      point.push_back(r);
      self(self, v + 1);
      point.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

/// Totally mixed equilibria of an integer game.
inline SolutionSet all_equilibria(const Game& g, const SolverOptions& opt = {}) {
  if (!g.integral()) fail(ErrorKind::NonIntegerPayoff, "payoffs must be integers");
  auto system = build_game_system(g, SystemForm::Indifference).polynomials;
  SampleSolution sample = sample_solution(system, opt);
  SolutionSet set = orbit_expand(sample, system);
  for (auto& t : set.tuples) {
    bool inside = std::all_of(t.begin(), t.end(), [](const AlgebraicNumber& a) {
      return a.compare(Rational(0)) > 0 && a.compare(Rational(1)) < 0;
    });
    if (!inside) continue;
    for (size_t i = 0; i < g.num_players() && inside; ++i)
      if (sign_at(t, probability_poly(g, i, g.strategies(i) - 1)) <= 0) inside = false;
    if (!inside) continue;
    MixedProfile p = MixedProfile::from_flat(g, t);
    if (!verify_equilibrium(g, p)) continue;
    std::optional<std::vector<RadicalExpr>> rad;
    if (std::all_of(t.begin(), t.end(), [](const AlgebraicNumber& a) { return a.degree() <= 2; })) {
      rad.emplace();
      for (auto& a : t) rad->push_back(to_radicals(a));
    }
    set.equilibria.push_back(std::move(p));
    set.radicals.push_back(std::move(rad));
  }
  return set;
}

// ---------------------------------------------------------------------------------------
// membership

enum class Verdict { Member, NonMember };
enum class WitnessReason { NonIntegerPayoff, RationalEquilibrium };

struct MembershipWitness {
  WitnessReason reason;
  std::optional<MixedProfile> profile;
};

struct MembershipVerdict {
  Verdict verdict = Verdict::Member;
  std::optional<MembershipWitness> witness;
  bool shape_fast_path = false;
};

inline const char* to_string(Verdict v) { return v == Verdict::Member ? "MEMBER" : "NON-MEMBER"; }
inline const char* to_string(WitnessReason r) {
  return r == WitnessReason::NonIntegerPayoff ? "NonIntegerPayoff" : "RationalEquilibrium";
}

/// One irreducible univariate g of degree >= 2 in the lowest variable, and every other
/// generator of the form x_w - h(lowest) with 1 <= deg h < deg g.
inline bool shape_position_check(const GroebnerBasis& basis) {
  if (basis.is_unit() || basis.is_zero_ideal()) return false;
  size_t n = basis.num_vars(), low = basis.order.lowest();
  std::optional<UniPoly> top;
  std::vector<std::pair<size_t, long>> linear;  // (variable, deg h)
  for (auto& g : basis.generators) {
    auto sup = g.support();
    if (sup.size() == 1 && sup[0] == low) {
      if (top) return false;
      top = UniPoly::from_multipoly(g, low);
      continue;
    }
    size_t w = n;
    for (size_t v : sup)
      if (v != low) {
        if (w != n) return false;
        w = v;
      }
    if (w == n || g.degree_in(w) != 1) return false;
    MultiPoly xw = MultiPoly::variable(n, w);
    Rational lead = 0;
    for (auto& t : g.terms())
      if (t.mono == xw.terms()[0].mono) lead = t.coef;
    if (lead == 0) return false;
    MultiPoly h = xw - g.scaled(1 / lead);
    if (h.degree_in(w) != 0) return false;
    linear.emplace_back(w, static_cast<long>(h.degree_in(low)));
  }
  if (!top || top->degree() < 2 || linear.size() + 1 != n) return false;
  for (auto& [w, dh] : linear)
    if (dh < 1 || dh >= top->degree()) return false;
  return is_irreducible(*top);
}

namespace detail {

/// Real points of the fibre over `variable = value` in [0,1]^n that are isolated, i.e. not
/// on a positive-dimensional piece of the fibre.
inline std::vector<std::vector<AlgebraicNumber>> isolated_fibre_points(const GroebnerBasis& basis, size_t variable,
                                                                      const Rational& value) {
  size_t n = basis.num_vars();
  std::vector<GroebnerBasis> zero_dim, positive;
  for (auto& piece : triangular_substitute(basis, variable, value))
    (is_zero_dimensional(piece) ? zero_dim : positive).push_back(std::move(piece));
  std::vector<std::vector<AlgebraicNumber>> out;
  for (auto& piece : zero_dim)
    for (auto& pt : real_solutions(piece.generators, n, RootFilter{Rational(0), Rational(1), false})) {
      bool on_curve = std::any_of(positive.begin(), positive.end(), [&](const GroebnerBasis& c) {
        return std::all_of(c.generators.begin(), c.generators.end(),
                           [&](const MultiPoly& g) { return sign_at(pt, g) == 0; });
      });
      bool seen = std::any_of(out.begin(), out.end(), [&](auto& q) { return q == pt; });
      if (!on_curve && !seen) out.push_back(std::move(pt));
    }
  return out;
}

}  // namespace detail

/// Rational-root membership test on the complementarity system. The first variable whose
/// elimination ideal is nonzero leads: each rational root in [0,1] is bound and the isolated
/// points of its fibre are verified; if every remaining irreducible factor cuts out a
/// component in shape position the game is a member immediately. Other variables are
/// processed the same way otherwise.
inline MembershipVerdict decide_membership(const Game& g) {
  MembershipVerdict out;
  if (!g.integral()) {
    out.verdict = Verdict::NonMember;
    out.witness = MembershipWitness{WitnessReason::NonIntegerPayoff, std::nullopt};
    return out;
  }
  auto gens = complementarity_in_free_vars(g);
  size_t n = g.num_free();
  bool any_univariate = false;
  for (size_t v = 0; v < n; ++v) {
    auto order = MonomialOrder::with_lowest(n, v);
    GroebnerBasis gb = buchberger(gens, order);
    UniPoly u;
    try {
      u = eliminate_to_univariate(gb, v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoUnivariate) throw;
      continue;
    }
    bool lead = !any_univariate;
    any_univariate = true;
    auto factors = factor_over_q(u);
    for (auto& f : factors) {
      auto r = is_rational_root(f.poly);
      if (!r || *r < 0 || *r > 1) continue;
      for (auto& pt : detail::isolated_fibre_points(gb, v, *r)) {
        MixedProfile p = MixedProfile::from_flat(g, pt);
        if (verify_equilibrium(g, p)) {
          out.verdict = Verdict::NonMember;
          out.witness = MembershipWitness{WitnessReason::RationalEquilibrium, std::move(p)};
          return out;
        }
      }
    }
    if (lead) {
      bool shape = true;
      for (auto& f : factors) {
        if (f.poly.degree() < 2) continue;
        auto with_factor = gens;
        with_factor.push_back(f.poly.to_multipoly(n, v));
        if (!shape_position_check(buchberger(with_factor, order))) {
          shape = false;
          break;
        }
      }
      if (shape) {
        out.shape_fast_path = true;
        return out;
      }
    }
  }
  if (!any_univariate) fail(ErrorKind::NoUnivariate, "no variable has a univariate elimination polynomial");
  return out;
}

}  // namespace ipie
