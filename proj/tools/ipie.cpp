#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ipie.hpp"

namespace {

struct RunConfig {
  std::optional<long> precision_bits;
  std::optional<long> degree_bound;
  std::optional<long> height_bound;
  int digits = 12;
  bool json = false;
  unsigned long long seed = 1;
  int max_iters = 256;
  int starts = 64;
};

void log(const std::string& msg) { std::cerr << "[ipie] " << msg << "\n"; }

int exit_code(ipie::ErrorKind k) {
  using ipie::ErrorKind;
  switch (k) {
    case ErrorKind::NotIPIE: return 2;
    case ErrorKind::NoUnivariate: return 3;
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NonIntegerPayoff:
    case ErrorKind::VariableMismatch: return 4;
    default: return 1;
  }
}

ipie::SolverOptions solver_options(const RunConfig& cfg) {
  ipie::SolverOptions opt;
  opt.precision_bits = cfg.precision_bits;
  opt.degree_bound = cfg.degree_bound;
  if (cfg.height_bound) opt.height_bound = ipie::Integer(*cfg.height_bound);
  opt.newton.max_iters = cfg.max_iters;
  opt.newton.starts = cfg.starts;
  return opt;
}

void print(const ipie::Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_solve(const std::string& path, const RunConfig& cfg) {
  ipie::Game g = ipie::parse_game(path);
  if (!g.integral()) ipie::fail(ipie::ErrorKind::NonIntegerPayoff, path + ": solve needs integer payoffs");
  auto t0 = std::chrono::steady_clock::now();
  ipie::SolutionSet set = ipie::all_equilibria(g, solver_options(cfg));
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  log(std::to_string(set.candidates_examined) + " candidates, " + std::to_string(set.tuples.size()) + " certified, " +
      std::to_string(static_cast<long>(ms)) + " ms");
  if (cfg.json)
    print(ipie::render_solutions_json(set, cfg.digits));
  else
    std::cout << ipie::render_solutions_text(set, ipie::free_variable_names(g), cfg.digits);
  return 0;
}

int cmd_membership(const std::string& path, const RunConfig& cfg) {
  ipie::Game g = ipie::parse_game(path);
  ipie::MembershipVerdict v = ipie::decide_membership(g);
  if (cfg.json)
    print(ipie::render_membership_json(v));
  else
    std::cout << ipie::render_membership_text(v);
  return 0;
}

int cmd_verify(const std::string& game_path, const std::string& profile_path, const RunConfig& cfg) {
  ipie::Game g = ipie::parse_game(game_path);
  ipie::MixedProfile p = ipie::parse_profile(profile_path, g);
  bool ok = ipie::verify_equilibrium(g, p);
  if (cfg.json)
    print(ipie::Json{{"equilibria", ipie::Json::array()}, {"equilibrium", ok}});
  else
    std::cout << (ok ? "EQUILIBRIUM" : "NOT AN EQUILIBRIUM") << "\n";
  return 0;
}

int cmd_oracle(const std::string& path, const RunConfig& cfg) {
  ipie::Game g = ipie::parse_game(path);
  auto eqs = ipie::enumerate_oracle(g);
  if (cfg.json)
    print(ipie::render_profiles_json(eqs));
  else
    std::cout << ipie::render_profiles_text(eqs);
  return 0;
}

int cmd_minpoly(const std::string& input, bool check, const RunConfig& cfg) {
  if (check) {
    std::string var = "x";
    for (char c : input)
      if (std::isalpha(static_cast<unsigned char>(c))) {
        var = std::string(1, c);
        break;
      }
    ipie::MultiPoly mp = ipie::parse_poly(input, {var});
    ipie::UniPoly p = ipie::UniPoly::from_multipoly(mp, 0);
    if (p.degree() < 1) ipie::fail(ipie::ErrorKind::InvalidArgument, "constant polynomial has no factors");
    for (auto& f : ipie::factor_over_q(p))
      for (int m = 0; m < f.multiplicity; ++m) std::cout << f.poly.coeff_list() << "\n";
    return 0;
  }
  auto value = ipie::parse_rational(input);
  if (!value) ipie::fail(ipie::ErrorKind::InvalidArgument, "not a decimal number: " + input);
  ipie::KLLParams kp;
  kp.degree_bound = cfg.degree_bound.value_or(2);
  kp.height_bound = ipie::Integer(cfg.height_bound.value_or(1));
  kp.precision_bits = cfg.precision_bits.value_or(0);
  ipie::UniPoly p = ipie::minimal_polynomial(*value, kp, ipie::decimal_accuracy_bits(input));
  if (cfg.json)
    print(ipie::Json{{"equilibria", ipie::Json::array()}, {"minpoly", p.to_string()}});
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

int cmd_corpus(size_t players, size_t strategies, int count, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < count; ++i)
    std::cout << ipie::game_to_json(ipie::random_game(std::vector<size_t>(players, strategies), rng)).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nash equilibria of integer-payoff games with irrational equilibria"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")->check(CLI::PositiveNumber);
    sub->add_option("--degree", cfg.degree_bound, "Degree bound for reconstruction")->check(CLI::PositiveNumber);
    sub->add_option("--height", cfg.height_bound, "Height bound for reconstruction")->check(CLI::PositiveNumber);
    sub->add_option("--digits", cfg.digits, "Decimal digits in output")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--max-iters", cfg.max_iters, "Newton iterations per start")->check(CLI::PositiveNumber);
    sub->add_option("--starts", cfg.starts, "Newton start points")->check(CLI::PositiveNumber);
  };

  std::string game_path, profile_path, minpoly_input;
  bool check = false;
  size_t players = 2, strategies = 2;
  int count = 10;

  auto* solve = app.add_subcommand("solve", "All totally mixed equilibria of an integer game");
  solve->add_option("game", game_path, "Game JSON file")->required();
  add_common(solve);

  auto* membership = app.add_subcommand("membership", "Decide whether every equilibrium is irrational");
  membership->add_option("game", game_path, "Game JSON file")->required();
  add_common(membership);

  auto* verify = app.add_subcommand("verify", "Check a rational profile for equilibrium");
  verify->add_option("game", game_path, "Game JSON file")->required();
  verify->add_option("profile", profile_path, "Profile JSON file")->required();
  add_common(verify);

  auto* oracle = app.add_subcommand("oracle", "All equilibria by support enumeration");
  oracle->add_option("game", game_path, "Game JSON file")->required();
  add_common(oracle);

  auto* minpoly = app.add_subcommand("minpoly", "Reconstruct a minimal polynomial, or factor one with --check");
  minpoly->add_option("input", minpoly_input, "Decimal approximation, or polynomial with --check")->required();
  minpoly->add_flag("--check", check, "Factor the polynomial over the rationals");
  add_common(minpoly);

  auto* corpus = app.add_subcommand("corpus", "Seeded random integer games, one JSON document per line");
  corpus->add_option("--players", players, "Number of players")->check(CLI::PositiveNumber);
  corpus->add_option("--strategies", strategies, "Strategies per player")->check(CLI::Range(2, 16));
  corpus->add_option("--count", count, "Number of games")->check(CLI::NonNegativeNumber);
  corpus->add_option("--seed", cfg.seed, "Random seed");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    if (*solve) return cmd_solve(game_path, cfg);
    if (*membership) return cmd_membership(game_path, cfg);
    if (*verify) return cmd_verify(game_path, profile_path, cfg);
    if (*oracle) return cmd_oracle(game_path, cfg);
    if (*minpoly) return cmd_minpoly(minpoly_input, check, cfg);
    if (*corpus) return cmd_corpus(players, strategies, count, cfg);
  } catch (const ipie::Error& e) {
    log(std::string("error: ") + e.what());
    return exit_code(e.kind());
  }
  return 0;
}
