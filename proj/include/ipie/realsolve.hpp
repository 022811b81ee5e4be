#pragma once

// Real solutions of zero-dimensional polynomial systems: one lex elimination per
// variable gives each coordinate's candidate roots, and tuples are assembled from
// the lowest variable upward, pruned by exact vanishing of the triangular basis.

#include <optional>
#include <vector>

#include "algebraic.hpp"
#include "factor.hpp"
#include "groebner.hpp"

namespace ipie {

struct RootFilter {
  Rational lo, hi;
  bool open = true;  // (lo, hi) versus [lo, hi]

  bool accepts(const AlgebraicNumber& a) const {
    int l = a.compare(lo), h = a.compare(hi);
    return open ? (l > 0 && h < 0) : (l >= 0 && h <= 0);
  }
};

/// Real roots of a nonzero univariate polynomial as algebraic numbers, ascending.
inline std::vector<AlgebraicNumber> real_roots(const UniPoly& p, const std::optional<RootFilter>& filter = {}) {
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  for (auto& f : factor_over_q(p)) {
    for (auto& r : conjugates(f.poly).roots)
      if (!filter || filter->accepts(r)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All real solutions, each coordinate passing `filter`. Throws NoUnivariate for
/// positive-dimensional systems.
inline std::vector<std::vector<AlgebraicNumber>> real_solutions(const std::vector<MultiPoly>& system, size_t num_vars,
                                                                const std::optional<RootFilter>& filter = {}) {
  std::vector<std::vector<AlgebraicNumber>> out;
  if (num_vars == 0) {
    for (auto& p : system)
      if (!p.is_zero()) return out;
    out.emplace_back();
    return out;
  }
  // plain lex basis: triangular, last variable lowest
  GroebnerBasis tri = buchberger(system, MonomialOrder::lex(num_vars));
  if (tri.is_unit()) return out;
  std::vector<std::vector<AlgebraicNumber>> candidates(num_vars);
  for (size_t v = 0; v < num_vars; ++v) {
    GroebnerBasis gb = v + 1 == num_vars ? tri : buchberger(system, MonomialOrder::with_lowest(num_vars, v));
    candidates[v] = real_roots(eliminate_to_univariate(gb, v), filter);
    if (candidates[v].empty()) return out;
  }
  // generators grouped by the lowest-ranked (largest index) variable they still need
  std::vector<std::vector<const MultiPoly*>> checks(num_vars);
  for (auto& g : tri.generators) {
    auto sup = g.support();
    if (sup.empty()) continue;
    checks[sup.front()].push_back(&g);
  }
  std::vector<AlgebraicNumber> point(num_vars, AlgebraicNumber(Rational(0)));
  auto extend = [&](auto&& self, size_t v) -> void {
    for (auto& c : candidates[v]) {
      point[v] = c;
      bool ok = true;
      for (auto* g : checks[v])
        if (sign_at(point, *g) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (v == 0) {
        out.push_back(point);
      } else {
        self(self, v - 1);
      }
    }
    point[v] = AlgebraicNumber(Rational(0));
  };
  extend(extend, num_vars - 1);
  return out;
}

}  // namespace ipie
