#pragma once

// Support enumeration: for a choice of supports, in-support strategies must be payoff
// indifferent and carry positive probability, and no off-support strategy may pay more.
// Two-player faces are linear and solved by exact elimination; larger games go through
// the zero-dimensional real solver on all in-support probabilities with sum relations.

#include <optional>
#include <vector>

#include "game.hpp"
#include "linalg.hpp"
#include "realsolve.hpp"

namespace ipie {

using Support = std::vector<std::vector<size_t>>;  // per player, ascending strategy indices

/// Every combination of nonempty per-player supports, in lexicographic bitmask order.
inline std::vector<Support> all_supports(const Game& g) {
  std::vector<Support> out{Support{}};
  for (size_t i = 0; i < g.num_players(); ++i) {
    std::vector<Support> next;
    size_t k = g.strategies(i);
    for (auto& partial : out)
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<size_t> s;
        for (size_t j = 0; j < k; ++j)
          if (mask & (1u << j)) s.push_back(j);
        Support ext = partial;
        ext.push_back(std::move(s));
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

inline bool is_full_support(const Game& g, const Support& s) {
  for (size_t i = 0; i < g.num_players(); ++i)
    if (s[i].size() != g.strategies(i)) return false;
  return true;
}

namespace detail {

/// Multilinear deviation advantage u_ij - alpha_i evaluated at a pure profile.
inline Rational advantage_at(const Game& g, size_t i, size_t j, const std::vector<size_t>& pure) {
  auto dev = pure;
  dev[i] = j;
  return g.payoff(i, dev) - g.payoff(i, pure);
}

/// The advantage of deviating to an off-support strategy is multilinear on the face, so it
/// is a positive combination of its values at the face's pure vertices. If some deviation is
/// >= 0 at every vertex and > 0 at one, no point of the open face is an equilibrium.
inline bool face_excluded_by_vertices(const Game& g, const Support& s) {
  std::vector<std::vector<size_t>> vertices{{}};
  for (size_t i = 0; i < g.num_players(); ++i) {
    std::vector<std::vector<size_t>> next;
    for (auto& v : vertices)
      for (size_t j : s[i]) {
        auto e = v;
        e.push_back(j);
        next.push_back(std::move(e));
      }
    vertices = std::move(next);
  }
  for (size_t i = 0; i < g.num_players(); ++i)
    for (size_t j = 0; j < g.strategies(i); ++j) {
      if (std::find(s[i].begin(), s[i].end(), j) != s[i].end()) continue;
      bool nonneg = true, positive = false;
      for (auto& v : vertices) {
        int sg = sign(advantage_at(g, i, j, v));
        if (sg < 0) nonneg = false;
        if (sg > 0) positive = true;
      }
      if (nonneg && positive) return true;
    }
  return false;
}

/// Indices of in-support unknowns: player i, strategy s[i][t] -> offset[i] + t.
inline std::vector<size_t> support_offsets(const Support& s) {
  std::vector<size_t> off(s.size());
  for (size_t i = 0, acc = 0; i < s.size(); ++i) {
    off[i] = acc;
    acc += s[i].size();
  }
  return off;
}

inline MixedProfile profile_from_support(const Game& g, const Support& s, const std::vector<AlgebraicNumber>& vals) {
  auto off = support_offsets(s);
  std::vector<std::vector<AlgebraicNumber>> free;
  for (size_t i = 0; i < g.num_players(); ++i) {
    std::vector<AlgebraicNumber> f(g.strategies(i) - 1, AlgebraicNumber(Rational(0)));
    for (size_t t = 0; t < s[i].size(); ++t)
      if (s[i][t] + 1 < g.strategies(i)) f[s[i][t]] = vals[off[i] + t];
    free.push_back(std::move(f));
  }
  return MixedProfile(std::move(free));
}

/// Reduced row echelon solve of a possibly non-square system. Returns nullopt when
/// inconsistent; sets `underdetermined` when the solution is not unique.
inline std::optional<Vector> solve_affine(Matrix A, Vector b, bool& underdetermined) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Rational inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    b[r] *= inv;
    for (size_t o = 0; o < rows; ++o) {
      if (o == r || A[o][c] == 0) continue;
      Rational f = A[o][c];
      for (size_t k = 0; k < cols; ++k) A[o][k] -= f * A[r][k];
      b[o] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (size_t o = r; o < rows; ++o)
    if (b[o] != 0) return std::nullopt;
  underdetermined = pivots.size() < cols;
  if (underdetermined) return std::nullopt;
  Vector x(cols);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
  return x;
}

/// Two players: player 1's indifference pins player 2's mix and vice versa.
inline std::optional<std::vector<AlgebraicNumber>> bimatrix_face(const Game& g, const Support& s, bool& underdetermined) {
  std::vector<AlgebraicNumber> vals;
  underdetermined = false;
  std::vector<Vector> mixes(2);
  for (size_t me = 0; me < 2; ++me) {
    size_t other = 1 - me;
    const auto& S = s[me];
    const auto& T = s[other];
    Matrix A;
    Vector b;
    // payoff(me, S[t]) - payoff(me, S[t+1]) = 0 as a linear form in the other's mix over T
    for (size_t t = 0; t + 1 < S.size(); ++t) {
      Vector row;
      for (size_t u : T) {
        std::vector<size_t> p0(2), p1(2);
        p0[me] = S[t];
        p0[other] = u;
        p1[me] = S[t + 1];
        p1[other] = u;
        row.push_back(g.payoff(me, p0) - g.payoff(me, p1));
      }
      A.push_back(row);
      b.push_back(0);
    }
    A.push_back(Vector(T.size(), Rational(1)));
    b.push_back(1);
    bool under = false;
    auto x = solve_affine(A, b, under);
    if (under) {
      underdetermined = true;
      continue;
    }
    if (!x) {
      underdetermined = false;  // inconsistency wins over a free side
      return std::nullopt;
    }
    mixes[other] = *x;
  }
  if (underdetermined) return std::nullopt;
  for (size_t i = 0; i < 2; ++i)
    for (auto& q : mixes[i]) {
      if (q <= 0) return std::nullopt;
      vals.emplace_back(q);
    }
  return vals;
}

/// n players: indifference and sum relations in all in-support probabilities.
inline std::vector<MultiPoly> face_system(const Game& g, const Support& s) {
  auto off = support_offsets(s);
  size_t m = 0;
  for (auto& si : s) m += si.size();
  auto var = [&](size_t i, size_t t) { return MultiPoly::variable(m, off[i] + t); };
  auto pay = [&](size_t i, size_t j) {
    MultiPoly acc(m);
    // sum over the others' in-support pure profiles
    std::vector<size_t> idx(g.num_players(), 0);
    while (true) {
      std::vector<size_t> pure(g.num_players());
      MultiPoly t = MultiPoly::constant(m, Rational(1));
      for (size_t l = 0; l < g.num_players(); ++l) {
        if (l == i) {
          pure[l] = j;
          continue;
        }
        pure[l] = s[l][idx[l]];
        t = t * var(l, idx[l]);
      }
      const Rational& a = g.payoff(i, pure);
      if (a != 0) acc += t.scaled(a);
      size_t l = 0;
      for (; l < g.num_players(); ++l) {
        if (l == i) continue;
        if (++idx[l] < s[l].size()) break;
        idx[l] = 0;
      }
      if (l == g.num_players()) break;
    }
    return acc;
  };
  std::vector<MultiPoly> sys;
  for (size_t i = 0; i < g.num_players(); ++i) {
    for (size_t t = 0; t + 1 < s[i].size(); ++t) sys.push_back(pay(i, s[i][t]) - pay(i, s[i][t + 1]));
    MultiPoly sum = MultiPoly::constant(m, Rational(-1));
    for (size_t t = 0; t < s[i].size(); ++t) sum += var(i, t);
    sys.push_back(sum);
  }
  return sys;
}

}  // namespace detail

/// Equilibria whose support is exactly `s` (in-support probabilities strictly positive).
/// A positive-dimensional face that the vertex test cannot exclude raises `degenerate_kind`.
inline std::vector<MixedProfile> face_equilibria(const Game& g, const Support& s,
                                                 ErrorKind degenerate_kind = ErrorKind::Degenerate) {
  std::vector<MixedProfile> out;
  std::vector<std::vector<AlgebraicNumber>> sols;
  if (g.num_players() == 2) {
    bool under = false;
    auto v = detail::bimatrix_face(g, s, under);
    if (under) {
      if (detail::face_excluded_by_vertices(g, s)) return out;
      fail(degenerate_kind, "support face with a continuum of solutions");
    }
    if (v) sols.push_back(*v);
  } else {
    auto sys = detail::face_system(g, s);
    size_t m = sys.empty() ? 0 : sys[0].num_vars();
    try {
      sols = real_solutions(sys, m, RootFilter{Rational(0), Rational(1), false});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoUnivariate) throw;
      if (detail::face_excluded_by_vertices(g, s)) return out;
      fail(degenerate_kind, "support face with a continuum of solutions");
    }
  }
  for (auto& v : sols) {
    bool positive = true;
    for (auto& a : v)
      if (a.compare(Rational(0)) <= 0) positive = false;
    if (!positive) continue;
    MixedProfile p = detail::profile_from_support(g, s, v);
    if (verify_equilibrium(g, p)) out.push_back(std::move(p));
  }
  return out;
}

/// All Nash equilibria by support enumeration (desk scale only).
inline std::vector<MixedProfile> enumerate_oracle(const Game& g) {
  if (g.k_star() > 64) fail(ErrorKind::TooLarge, "oracle limited to at most 64 pure profiles");
  std::vector<MixedProfile> out;
  for (auto& s : all_supports(g))
    for (auto& p : face_equilibria(g, s)) out.push_back(std::move(p));
  return out;
}

}  // namespace ipie
