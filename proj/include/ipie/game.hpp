#pragma once

// Finite normal-form games, mixed profiles, game systems and exact equilibrium checks.
//
// Free variables: player i contributes k_i - 1 free probabilities (strategies 0..k_i-2);
// the last strategy's probability is 1 minus their sum.

#include <numeric>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "multipoly.hpp"

namespace ipie {

class Game {
 public:
  Game() = default;

  /// payoffs[i] is player i's tensor flattened row-major over (j_1, ..., j_n).
  Game(std::vector<size_t> strategy_counts, std::vector<std::vector<Rational>> payoffs)
      : counts_(std::move(strategy_counts)), payoffs_(std::move(payoffs)) {
    if (counts_.empty()) fail(ErrorKind::MalformedInput, "a game needs at least one player");
    for (auto k : counts_)
      if (k < 2) fail(ErrorKind::MalformedInput, "every player needs at least 2 strategies");
    if (payoffs_.size() != counts_.size())
      fail(ErrorKind::MalformedInput, "expected one payoff tensor per player, got " + std::to_string(payoffs_.size()));
    for (size_t i = 0; i < payoffs_.size(); ++i)
      if (payoffs_[i].size() != k_star())
        fail(ErrorKind::MalformedInput, "player " + std::to_string(i + 1) + " tensor has " +
                                            std::to_string(payoffs_[i].size()) + " entries, expected " +
                                            std::to_string(k_star()));
  }

  static Game from_integers(std::vector<size_t> counts, const std::vector<std::vector<long>>& payoffs) {
    std::vector<std::vector<Rational>> q;
    for (auto& row : payoffs) q.emplace_back(row.begin(), row.end());
    return Game(std::move(counts), std::move(q));
  }

  size_t num_players() const { return counts_.size(); }
  const std::vector<size_t>& strategy_counts() const { return counts_; }
  size_t strategies(size_t player) const { return counts_.at(player); }
  size_t k_plus() const { return std::accumulate(counts_.begin(), counts_.end(), size_t{0}); }
  size_t k_star() const {
    return std::accumulate(counts_.begin(), counts_.end(), size_t{1}, std::multiplies<>());
  }
  size_t num_free() const { return k_plus() - counts_.size(); }

  const std::vector<std::vector<Rational>>& payoffs() const { return payoffs_; }
  const Rational& payoff(size_t player, size_t flat) const { return payoffs_.at(player).at(flat); }
  const Rational& payoff(size_t player, const std::vector<size_t>& pure) const { return payoff(player, flat_index(pure)); }

  bool integral() const {
    for (auto& row : payoffs_)
      for (auto& v : row)
        if (!is_integer(v)) return false;
    return true;
  }

  size_t flat_index(const std::vector<size_t>& pure) const {
    if (pure.size() != counts_.size()) fail(ErrorKind::VariableMismatch, "pure profile arity");
    size_t idx = 0;
    for (size_t i = 0; i < pure.size(); ++i) {
      if (pure[i] >= counts_[i]) fail(ErrorKind::InvalidArgument, "strategy index out of range");
      idx = idx * counts_[i] + pure[i];
    }
    return idx;
  }

  std::vector<size_t> unflatten(size_t flat) const {
    std::vector<size_t> pure(counts_.size());
    for (size_t i = counts_.size(); i-- > 0;) {
      pure[i] = flat % counts_[i];
      flat /= counts_[i];
    }
    return pure;
  }

  /// Offset of player i's first free variable.
  size_t free_offset(size_t player) const {
    size_t off = 0;
    for (size_t i = 0; i < player; ++i) off += counts_[i] - 1;
    return off;
  }

  bool operator==(const Game&) const = default;

 private:
  std::vector<size_t> counts_;
  std::vector<std::vector<Rational>> payoffs_;
};

/// Names of the free variables: x, y, z, w when every player has two strategies and n <= 4,
/// otherwise x<player>_<strategy> (1-based).
inline std::vector<std::string> free_variable_names(const Game& g) {
  bool simple = g.num_players() <= 4;
  for (auto k : g.strategy_counts()) simple = simple && k == 2;
  std::vector<std::string> names;
  static const char* letters[] = {"x", "y", "z", "w"};
  for (size_t i = 0; i < g.num_players(); ++i)
    for (size_t j = 0; j + 1 < g.strategies(i); ++j)
      names.push_back(simple ? std::string(letters[i]) : "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return names;
}

/// Probabilities of every player's strategies; only the free ones are stored.
class MixedProfile {
 public:
  MixedProfile() = default;

  /// Free coordinates per player (k_i - 1 each).
  explicit MixedProfile(std::vector<std::vector<AlgebraicNumber>> free) : free_(std::move(free)) {}

  /// Full rational distributions; each must sum to exactly 1 with entries in [0, 1].
  static MixedProfile from_rational(const std::vector<std::vector<Rational>>& probs) {
    std::vector<std::vector<AlgebraicNumber>> free;
    for (size_t i = 0; i < probs.size(); ++i) {
      Rational s = 0;
      for (auto& p : probs[i]) {
        if (p < 0 || p > 1) fail(ErrorKind::InvalidArgument, "probability outside [0,1] for player " + std::to_string(i + 1));
        s += p;
      }
      if (s != 1) fail(ErrorKind::InvalidArgument, "probabilities of player " + std::to_string(i + 1) + " sum to " + s.get_str());
      if (probs[i].size() < 2) fail(ErrorKind::InvalidArgument, "each player needs at least 2 strategies");
      std::vector<AlgebraicNumber> f;
      for (size_t j = 0; j + 1 < probs[i].size(); ++j) f.emplace_back(probs[i][j]);
      free.push_back(std::move(f));
    }
    return MixedProfile(std::move(free));
  }

  static MixedProfile pure(const Game& g, const std::vector<size_t>& strategies) {
    std::vector<std::vector<Rational>> probs;
    for (size_t i = 0; i < g.num_players(); ++i) {
      std::vector<Rational> p(g.strategies(i), Rational(0));
      p.at(strategies.at(i)) = 1;
      probs.push_back(p);
    }
    return from_rational(probs);
  }

  /// Splits a flat free-coordinate vector by the game's strategy counts.
  static MixedProfile from_flat(const Game& g, const std::vector<AlgebraicNumber>& flat) {
    if (flat.size() != g.num_free()) fail(ErrorKind::VariableMismatch, "free coordinate count");
    std::vector<std::vector<AlgebraicNumber>> free;
    size_t off = 0;
    for (size_t i = 0; i < g.num_players(); ++i) {
      free.emplace_back(flat.begin() + static_cast<long>(off), flat.begin() + static_cast<long>(off + g.strategies(i) - 1));
      off += g.strategies(i) - 1;
    }
    return MixedProfile(std::move(free));
  }

  size_t num_players() const { return free_.size(); }
  const std::vector<std::vector<AlgebraicNumber>>& free() const { return free_; }

  std::vector<AlgebraicNumber> flat() const {
    std::vector<AlgebraicNumber> out;
    for (auto& f : free_) out.insert(out.end(), f.begin(), f.end());
    return out;
  }

  bool is_rational() const {
    for (auto& f : free_)
      for (auto& a : f)
        if (!a.is_rational()) return false;
    return true;
  }

  bool has_rational_coordinate() const {
    for (auto& f : free_)
      for (auto& a : f)
        if (a.is_rational()) return true;
    return false;
  }

  /// Exact distribution of player i (rational profiles only).
  std::vector<Rational> rational_probs(size_t i) const {
    std::vector<Rational> p;
    Rational s = 0;
    for (auto& a : free_.at(i)) {
      p.push_back(a.rational_value());
      s += p.back();
    }
    p.push_back(1 - s);
    return p;
  }

  /// Enclosure of the last strategy's probability.
  Interval last_enclosure(size_t i, long bits) const {
    Interval s(Rational(1));
    for (auto& a : free_.at(i)) s = s - a.enclosure(bits + 4);
    return s;
  }

  void check_arity(const Game& g) const {
    if (free_.size() != g.num_players()) fail(ErrorKind::VariableMismatch, "profile has the wrong number of players");
    for (size_t i = 0; i < free_.size(); ++i)
      if (free_[i].size() + 1 != g.strategies(i))
        fail(ErrorKind::VariableMismatch, "profile of player " + std::to_string(i + 1) + " has the wrong length");
  }

 private:
  std::vector<std::vector<AlgebraicNumber>> free_;
};

/// Probability of (player, strategy) as a polynomial in the free variables.
inline MultiPoly probability_poly(const Game& g, size_t player, size_t strategy) {
  size_t m = g.num_free(), off = g.free_offset(player), k = g.strategies(player);
  if (strategy + 1 < k) return MultiPoly::variable(m, off + strategy);
  MultiPoly p = MultiPoly::constant(m, Rational(1));
  for (size_t j = 0; j + 1 < k; ++j) p -= MultiPoly::variable(m, off + j);
  return p;
}

/// Payoff to `player` for pure `strategy` against the others' mixed strategies.
inline MultiPoly strategy_payoff_poly(const Game& g, size_t player, size_t strategy) {
  size_t m = g.num_free();
  std::vector<std::vector<MultiPoly>> prob(g.num_players());
  for (size_t l = 0; l < g.num_players(); ++l)
    for (size_t j = 0; j < g.strategies(l); ++j) prob[l].push_back(probability_poly(g, l, j));
  MultiPoly acc(m);
  for (size_t flat = 0; flat < g.k_star(); ++flat) {
    auto pure = g.unflatten(flat);
    if (pure[player] != strategy) continue;
    const Rational& a = g.payoff(player, flat);
    if (a == 0) continue;
    MultiPoly t = MultiPoly::constant(m, a);
    for (size_t l = 0; l < g.num_players(); ++l)
      if (l != player) t = t * prob[l][pure[l]];
    acc += t;
  }
  return acc;
}

/// Expected payoff of `player` as a polynomial in the free variables.
inline MultiPoly expected_payoff_poly(const Game& g, size_t player) {
  MultiPoly acc(g.num_free());
  for (size_t j = 0; j < g.strategies(player); ++j)
    acc += probability_poly(g, player, j) * strategy_payoff_poly(g, player, j);
  return acc;
}

/// Exact expected payoff at a rational profile.
inline Rational expected_payoff(const Game& g, const MixedProfile& profile, size_t player) {
  if (player >= g.num_players()) fail(ErrorKind::InvalidArgument, "player index out of range");
  profile.check_arity(g);
  if (!profile.is_rational()) fail(ErrorKind::InvalidArgument, "expected_payoff needs a rational profile");
  std::vector<std::vector<Rational>> probs;
  for (size_t i = 0; i < g.num_players(); ++i) probs.push_back(profile.rational_probs(i));
  Rational total = 0;
  for (size_t flat = 0; flat < g.k_star(); ++flat) {
    auto pure = g.unflatten(flat);
    Rational w = g.payoff(player, flat);
    for (size_t i = 0; i < pure.size() && w != 0; ++i) w *= probs[i][pure[i]];
    total += w;
  }
  return total;
}

enum class SystemForm { Complementarity, Indifference };

struct VariableLabel {
  size_t player, strategy;
  bool operator==(const VariableLabel&) const = default;
};

struct GameSystem {
  std::vector<MultiPoly> polynomials;
  std::vector<VariableLabel> variables;
  std::vector<std::string> names;
  SystemForm form = SystemForm::Indifference;

  size_t num_vars() const { return variables.size(); }
  bool is_square() const { return polynomials.size() == variables.size(); }
};

/// Complementarity form keeps all K+ probabilities as variables and emits
/// x_ij * (alpha_i - payoff_ij) plus one sum relation per player. Indifference form works
/// in the free variables and emits payoff_ij - payoff_i(j+1) for consecutive strategies.
inline GameSystem build_game_system(const Game& g, SystemForm form) {
  GameSystem sys;
  sys.form = form;
  if (form == SystemForm::Indifference) {
    sys.names = free_variable_names(g);
    for (size_t i = 0; i < g.num_players(); ++i) {
      for (size_t j = 0; j + 1 < g.strategies(i); ++j) sys.variables.push_back({i, j});
      std::vector<MultiPoly> pay;
      for (size_t j = 0; j < g.strategies(i); ++j) pay.push_back(strategy_payoff_poly(g, i, j));
      for (size_t j = 0; j + 1 < g.strategies(i); ++j) sys.polynomials.push_back(pay[j] - pay[j + 1]);
    }
    return sys;
  }
  // all K+ variables, player-major
  size_t n = g.k_plus();
  std::vector<size_t> offset(g.num_players());
  for (size_t i = 0, off = 0; i < g.num_players(); ++i) {
    offset[i] = off;
    for (size_t j = 0; j < g.strategies(i); ++j) {
      sys.variables.push_back({i, j});
      sys.names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
    off += g.strategies(i);
  }
  auto var = [&](size_t i, size_t j) { return MultiPoly::variable(n, offset[i] + j); };
  auto payoff = [&](size_t i, size_t j) {
    MultiPoly acc(n);
    for (size_t flat = 0; flat < g.k_star(); ++flat) {
      auto pure = g.unflatten(flat);
      if (pure[i] != j || g.payoff(i, flat) == 0) continue;
      MultiPoly t = MultiPoly::constant(n, g.payoff(i, flat));
      for (size_t l = 0; l < g.num_players(); ++l)
        if (l != i) t = t * var(l, pure[l]);
      acc += t;
    }
    return acc;
  };
  for (size_t i = 0; i < g.num_players(); ++i) {
    std::vector<MultiPoly> pay;
    MultiPoly alpha(n);
    for (size_t j = 0; j < g.strategies(i); ++j) {
      pay.push_back(payoff(i, j));
      alpha += var(i, j) * pay.back();
    }
    for (size_t j = 0; j < g.strategies(i); ++j) sys.polynomials.push_back(var(i, j) * (alpha - pay[j]));
  }
  for (size_t i = 0; i < g.num_players(); ++i) {
    MultiPoly s = MultiPoly::constant(n, Rational(-1));
    for (size_t j = 0; j < g.strategies(i); ++j) s += var(i, j);
    sys.polynomials.push_back(s);
  }
  return sys;
}

/// Complementarity polynomials rewritten in the free variables (sum relations substituted),
/// made primitive and deduplicated up to sign.
inline std::vector<MultiPoly> complementarity_in_free_vars(const Game& g) {
  std::vector<MultiPoly> out;
  auto add = [&](MultiPoly p) {
    if (p.is_zero()) return;
    p = p.primitive();
    for (auto& q : out)
      if (q == p) return;
    out.push_back(std::move(p));
  };
  for (size_t i = 0; i < g.num_players(); ++i) {
    MultiPoly alpha = expected_payoff_poly(g, i);
    for (size_t j = 0; j < g.strategies(i); ++j)
      add(probability_poly(g, i, j) * (alpha - strategy_payoff_poly(g, i, j)));
  }
  return out;
}

/// Deviation gaps alpha_i - payoff_ij in the free variables; Nash iff all are >= 0.
inline std::vector<MultiPoly> deviation_gaps(const Game& g) {
  std::vector<MultiPoly> gaps;
  for (size_t i = 0; i < g.num_players(); ++i) {
    MultiPoly alpha = expected_payoff_poly(g, i);
    for (size_t j = 0; j < g.strategies(i); ++j) gaps.push_back(alpha - strategy_payoff_poly(g, i, j));
  }
  return gaps;
}

/// Exact Nash check: every probability is in [0,1] and no pure deviation pays strictly more.
inline bool verify_equilibrium(const Game& g, const MixedProfile& profile) {
  profile.check_arity(g);
  auto point = profile.flat();
  // feasibility of the implied last coordinates
  for (size_t i = 0; i < g.num_players(); ++i) {
    for (auto& a : profile.free()[i])
      if (a.compare(Rational(0)) < 0 || a.compare(Rational(1)) > 0) return false;
    if (sign_at(point, probability_poly(g, i, g.strategies(i) - 1)) < 0) return false;
  }
  for (auto& gap : deviation_gaps(g))
    if (sign_at(point, gap) < 0) return false;
  return true;
}

}  // namespace ipie
