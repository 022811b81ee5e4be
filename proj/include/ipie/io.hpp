#pragma once

// Game and profile files, text and JSON rendering of results, and the seeded random game
// sampler used for corpus runs.

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "game.hpp"
#include "solver.hpp"

namespace ipie {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string line_col(std::string_view text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::MalformedInput, source + ": " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": invalid JSON");
  }
}

/// Integers, decimal literals and "p/q" strings, all exact.
inline Rational number_from_json(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_number_float()) {
    auto q = parse_rational(v.dump());
    if (!q) fail(ErrorKind::MalformedInput, field + ": unreadable number " + v.dump());
    return *q;
  }
  if (v.is_string()) {
    auto q = parse_rational(v.get<std::string>());
    if (!q) fail(ErrorKind::MalformedInput, field + ": unreadable number \"" + v.get<std::string>() + "\"");
    return *q;
  }
  fail(ErrorKind::MalformedInput, field + ": expected a number");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline Game game_from_json(const Json& doc, const std::string& source = "game") {
  if (!doc.is_object()) fail(ErrorKind::MalformedInput, source + ": top level must be an object");
  for (const char* key : {"players", "strategies", "payoffs"})
    if (!doc.contains(key)) fail(ErrorKind::MalformedInput, source + ": missing field \"" + key + "\"");
  const Json& players = doc["players"];
  if (!players.is_number_integer() || players.get<long>() < 1)
    fail(ErrorKind::MalformedInput, source + ": \"players\" must be a positive integer");
  size_t n = players.get<size_t>();
  const Json& strategies = doc["strategies"];
  if (!strategies.is_array() || strategies.size() != n)
    fail(ErrorKind::MalformedInput, source + ": \"strategies\" must be an array of " + std::to_string(n) + " integers");
  std::vector<size_t> counts;
  for (size_t i = 0; i < n; ++i) {
    const Json& k = strategies[i];
    if (!k.is_number_integer() || k.get<long>() < 2)
      fail(ErrorKind::MalformedInput, source + ": strategies[" + std::to_string(i) + "] must be an integer >= 2");
    counts.push_back(k.get<size_t>());
  }
  const Json& payoffs = doc["payoffs"];
  if (!payoffs.is_array() || payoffs.size() != n)
    fail(ErrorKind::MalformedInput, source + ": \"payoffs\" must hold one array per player");
  size_t cells = 1;
  for (size_t k : counts) cells *= k;
  std::vector<std::vector<Rational>> table;
  for (size_t i = 0; i < n; ++i) {
    std::string field = source + ": payoffs[" + std::to_string(i) + "]";
    if (!payoffs[i].is_array() || payoffs[i].size() != cells)
      fail(ErrorKind::MalformedInput, field + " must have " + std::to_string(cells) + " entries");
    std::vector<Rational> row;
    for (size_t c = 0; c < cells; ++c)
      row.push_back(detail::number_from_json(payoffs[i][c], field + "[" + std::to_string(c) + "]"));
    table.push_back(std::move(row));
  }
  return Game(std::move(counts), std::move(table));
}

inline Game parse_game_text(std::string_view text, const std::string& source = "game") {
  return game_from_json(detail::parse_json_text(text, source), source);
}

inline Game parse_game(const std::string& path) { return parse_game_text(detail::read_file(path), path); }

inline Json game_to_json(const Game& g) {
  Json doc;
  doc["players"] = g.num_players();
  doc["strategies"] = Json::array();
  for (size_t i = 0; i < g.num_players(); ++i) doc["strategies"].push_back(g.strategies(i));
  doc["payoffs"] = Json::array();
  for (size_t i = 0; i < g.num_players(); ++i) {
    Json row = Json::array();
    for (size_t c = 0; c < g.k_star(); ++c) {
      const Rational& a = g.payoff(i, c);
      if (is_integer(a) && a.get_num().fits_slong_p())
        row.push_back(a.get_num().get_si());
      else
        row.push_back(to_string(a));
    }
    doc["payoffs"].push_back(std::move(row));
  }
  return doc;
}

/// {"profile": [[p_11, ..., p_1k], ...]} with full rational distributions.
inline MixedProfile profile_from_json(const Json& doc, const Game& g, const std::string& source = "profile") {
  if (!doc.is_object() || !doc.contains("profile") || !doc["profile"].is_array())
    fail(ErrorKind::MalformedInput, source + ": expected {\"profile\": [[...], ...]}");
  const Json& rows = doc["profile"];
  if (rows.size() != g.num_players())
    fail(ErrorKind::MalformedInput, source + ": profile needs " + std::to_string(g.num_players()) + " distributions");
  std::vector<std::vector<Rational>> probs;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string field = source + ": profile[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != g.strategies(i))
      fail(ErrorKind::MalformedInput, field + " must have " + std::to_string(g.strategies(i)) + " entries");
    std::vector<Rational> p;
    for (size_t j = 0; j < rows[i].size(); ++j)
      p.push_back(detail::number_from_json(rows[i][j], field + "[" + std::to_string(j) + "]"));
    probs.push_back(std::move(p));
  }
  try {
    return MixedProfile::from_rational(probs);
  } catch (const Error& e) {
    fail(ErrorKind::MalformedInput, source + ": " + e.what());
  }
}

inline MixedProfile parse_profile(const std::string& path, const Game& g) {
  std::string text = detail::read_file(path);
  return profile_from_json(detail::parse_json_text(text, path), g, path);
}

// ---------------------------------------------------------------------------------------
// rendering

/// Exact form: rational, closed-form quadratic, or minimal polynomial with an isolating interval.
inline std::string exact_form(const AlgebraicNumber& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  if (a.degree() == 2) return to_radicals(a).to_string();
  return "root of " + a.minpoly().to_string() + " in [" + to_string(a.interval().lo) + ", " + to_string(a.interval().hi) + "]";
}

inline std::string profile_to_text(const MixedProfile& p) {
  std::string out;
  for (size_t i = 0; i < p.num_players(); ++i) {
    if (i) out += " ";
    out += "(";
    for (auto& a : p.free()[i]) out += exact_form(a) + "; ";
    // last coordinate is implied
    bool rational = std::all_of(p.free()[i].begin(), p.free()[i].end(), [](auto& a) { return a.is_rational(); });
    if (rational) {
      out += to_string(p.rational_probs(i).back());
    } else if (p.free()[i].size() == 1) {
      out += exact_form(p.free()[i][0].one_minus());
    } else {
      out += "1 - sum";
    }
    out += ")";
  }
  return out;
}

inline Json profile_to_json(const MixedProfile& p) {
  Json rows = Json::array();
  for (size_t i = 0; i < p.num_players(); ++i) {
    Json row = Json::array();
    for (auto& a : p.free()[i]) row.push_back(exact_form(a));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string render_solutions_text(const SolutionSet& set, const std::vector<std::string>& names, int digits) {
  std::ostringstream os;
  size_t n = set.equilibria.size();
  os << n << (n == 1 ? " equilibrium" : " equilibria") << "\n";
  for (size_t e = 0; e < n; ++e) {
    os << "equilibrium " << e + 1 << "\n";
    auto coords = set.equilibria[e].flat();
    for (size_t v = 0; v < coords.size(); ++v) {
      const auto& a = coords[v];
      os << "  " << names[v] << " = ";
      if (set.radicals[e]) os << (*set.radicals[e])[v].to_string() << "  ";
      os << "~ " << a.to_string(digits) << "  minpoly " << a.minpoly().to_string(names[v]) << "\n";
    }
  }
  return os.str();
}

inline Json render_solutions_json(const SolutionSet& set, int digits) {
  Json doc;
  doc["equilibria"] = Json::array();
  for (size_t e = 0; e < set.equilibria.size(); ++e) {
    Json eq;
    Json minpolys = Json::array(), intervals = Json::array(), decimals = Json::array();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Rational width(Integer(1), scale);
    for (auto& a : set.equilibria[e].flat()) {
      minpolys.push_back(a.minpoly().to_string());
      auto iv = a.refined_to(width).interval();
      intervals.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
      decimals.push_back(a.to_string(digits));
    }
    eq["minpolys"] = std::move(minpolys);
    eq["intervals"] = std::move(intervals);
    if (set.radicals[e]) {
      Json rad = Json::array();
      for (auto& r : *set.radicals[e]) rad.push_back(r.to_string());
      eq["radicals"] = std::move(rad);
    }
    eq["decimals"] = std::move(decimals);
    doc["equilibria"].push_back(std::move(eq));
  }
  return doc;
}

inline std::string render_membership_text(const MembershipVerdict& v) {
  std::string out = to_string(v.verdict);
  if (v.shape_fast_path) out += " (shape fast path)";
  out += "\n";
  if (v.witness) {
    out += std::string("reason: ") + to_string(v.witness->reason) + "\n";
    if (v.witness->profile) out += "witness: " + profile_to_text(*v.witness->profile) + "\n";
  }
  out += std::string("shape_fast_path: ") + (v.shape_fast_path ? "true" : "false") + "\n";
  return out;
}

inline Json render_membership_json(const MembershipVerdict& v) {
  Json doc;
  doc["equilibria"] = Json::array();
  doc["verdict"] = v.verdict == Verdict::Member ? "Member" : "NonMember";
  doc["shape_fast_path"] = v.shape_fast_path;
  if (v.witness) {
    Json w;
    w["reason"] = to_string(v.witness->reason);
    if (v.witness->profile) w["profile"] = profile_to_json(*v.witness->profile);
    doc["witness"] = std::move(w);
  }
  return doc;
}

inline std::string render_profiles_text(const std::vector<MixedProfile>& ps) {
  std::string out = std::to_string(ps.size()) + (ps.size() == 1 ? " equilibrium\n" : " equilibria\n");
  for (auto& p : ps) out += profile_to_text(p) + "\n";
  return out;
}

inline Json render_profiles_json(const std::vector<MixedProfile>& ps) {
  Json doc;
  doc["equilibria"] = Json::array();
  for (auto& p : ps) doc["equilibria"].push_back(Json{{"profile", profile_to_json(p)}});
  return doc;
}

// ---------------------------------------------------------------------------------------
// random games

/// Payoffs drawn uniformly from [lo, hi] by rejection on the raw 64-bit stream, so the
/// sequence depends only on the seed.
inline Game random_game(const std::vector<size_t>& counts, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
  unsigned long long limit = std::numeric_limits<unsigned long long>::max() - std::numeric_limits<unsigned long long>::max() % span;
  size_t cells = 1;
  for (size_t k : counts) cells *= k;
  std::vector<std::vector<long>> payoffs(counts.size(), std::vector<long>(cells));
  for (auto& row : payoffs)
    for (auto& a : row) {
      unsigned long long r;
      do r = rng();
      while (r >= limit);
      a = lo + static_cast<long>(r % span);
    }
  return Game::from_integers(counts, payoffs);
}

}  // namespace ipie
