// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ipie.hpp"

using namespace ipie;

namespace {

// Pinned limits.
constexpr double kReconstructSeconds = 1.0;
constexpr double kPipelineSeconds = 10.0;
constexpr double kMembershipSeconds = 10.0;
constexpr double kCorpusSeconds = 300.0;
constexpr long kFiniteDifferenceStep = -40;  // h = 2^-40
constexpr long kJacobianRelTol = -20;        // 2^-20
constexpr int kCorpusPairs = 200, kCorpusTriples = 50;
constexpr std::uint64_t kSeedPairs = 20240601, kSeedTriples = 20240602;
constexpr long kQuadraticBound = 50;

const UniPoly kEliminant{0, 3, -11, 7, 1};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Game fixture(const std::string& name) { return parse_game(std::string(IPIE_GAMES_DIR) + "/" + name); }

bool same_profile(const MixedProfile& a, const MixedProfile& b) {
  auto fa = a.flat(), fb = b.flat();
  if (fa.size() != fb.size()) return false;
  for (size_t i = 0; i < fa.size(); ++i)
    if (!(fa[i] == fb[i])) return false;
  return true;
}

bool same_profile_set(const std::vector<MixedProfile>& a, const std::vector<MixedProfile>& b) {
  if (a.size() != b.size()) return false;
  auto covered = [](const std::vector<MixedProfile>& xs, const std::vector<MixedProfile>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const MixedProfile& x) {
      return std::any_of(ys.begin(), ys.end(), [&](const MixedProfile& y) { return same_profile(x, y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + static_cast<long>(v % span);
}

// ---------------------------------------------------------------------------------------

Outcome reconstruction_chain() {
  auto t0 = std::chrono::steady_clock::now();
  const std::pair<const char*, UniPoly> cases[] = {
      {"0.7282202113", UniPoly{9, -16, 5}}, {"0.3588989435", UniPoly{-3, 8, 1}}, {"0.4717797888", UniPoly{-3, 4, 5}}};
  KLLParams kp;
  kp.degree_bound = 2;
  bool ok = true;
  std::string got;
  for (auto& [text, want] : cases) {
    UniPoly p = minimal_polynomial(*parse_rational(text), kp, decimal_accuracy_bits(text));
    ok = ok && p == want;
    got += (got.empty() ? "" : ", ") + p.to_string();
  }
  double s = seconds_since(t0);
  return {ok && s < kReconstructSeconds, got + " in " + fmt_seconds(s)};
}

Outcome orientation_pinning() {
  const int cell[2][2][2][3] = {{{{3, 0, 2}, {0, 2, 0}}, {{0, 1, 0}, {1, 0, 0}}},
                                {{{1, 0, 0}, {0, 1, 0}}, {{0, 3, 0}, {2, 0, 3}}}};
  Game pinned = fixture("table1.json");
  std::vector<int> axis{0, 1, 2};
  int matches = 0, tried = 0;
  bool pinned_matches = false;
  do {
    std::vector<int> slot{0, 1, 2};
    do {
      ++tried;
      std::vector<std::vector<long>> pay(3, std::vector<long>(8));
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          for (int j3 = 0; j3 < 2; ++j3) {
            int js[3] = {j1, j2, j3}, at[3];
            for (int i = 0; i < 3; ++i) at[axis[i]] = js[i];
            for (int i = 0; i < 3; ++i) pay[i][j1 * 4 + j2 * 2 + j3] = cell[at[0]][at[1]][at[2]][slot[i]];
          }
      Game g = Game::from_integers({2, 2, 2}, pay);
      auto gb = buchberger(complementarity_in_free_vars(g), MonomialOrder({2, 0, 1}));
      bool hit = false;
      try {
        hit = eliminate_to_univariate(gb, 1) == kEliminant;
      } catch (const Error&) {
      }
      if (hit) {
        ++matches;
        if (g == pinned) pinned_matches = true;
      }
    } while (std::next_permutation(slot.begin(), slot.end()));
  } while (std::next_permutation(axis.begin(), axis.end()));
  return {pinned_matches, std::to_string(matches) + " of " + std::to_string(tried) +
                              " readings give the quartic; fixture is one of them: " + (pinned_matches ? "yes" : "no")};
}

Outcome rational_rejection() {
  Game g = fixture("table1.json");
  auto roots = rational_roots(kEliminant);
  bool roots_ok = roots == std::vector<Rational>{0, 1};
  auto gb = buchberger(complementarity_in_free_vars(g), MonomialOrder({2, 0, 1}));
  bool ok = roots_ok && eliminate_to_univariate(gb, 1) == kEliminant;
  std::string detail = std::string("roots {0,1}: ") + (roots_ok ? "yes" : "no");
  const std::vector<std::vector<Rational>> expect[2] = {{{0, 0, 0}}, {{1, 1, 1}}};
  for (int r = 0; r < 2; ++r) {
    auto fibre = rational_fibre(gb, 1, Rational(r));
    bool tuple_ok = fibre.isolated_points == expect[r];
    ok = ok && tuple_ok;
    for (auto& pt : fibre.isolated_points) {
      std::vector<AlgebraicNumber> a(pt.begin(), pt.end());
      bool eq = verify_equilibrium(g, MixedProfile::from_flat(g, a));
      ok = ok && !eq;
      detail += "; y=" + std::to_string(r) + " -> (" + pt[0].get_str() + "," + pt[1].get_str() + "," + pt[2].get_str() +
                ") " + (eq ? "accepted" : "rejected");
    }
    if (!tuple_ok) detail += "; y=" + std::to_string(r) + " fibre differs";
  }
  return {ok, detail};
}

Outcome end_to_end() {
  Game g = fixture("table1.json");
  auto t0 = std::chrono::steady_clock::now();
  auto set = all_equilibria(g);
  double s = seconds_since(t0);
  auto sys = build_game_system(g, SystemForm::Indifference).polynomials;
  auto orbit = orbit_expand(sample_solution(sys), sys);
  const std::vector<std::string> want{"(8 + -1*sqrt(19))/5", "(-4 + 1*sqrt(19))/1", "(-2 + 1*sqrt(19))/5"};
  std::vector<std::string> got;
  if (set.equilibria.size() == 1 && set.radicals[0])
    for (auto& r : *set.radicals[0]) got.push_back(r.to_string());
  bool ok = set.equilibria.size() == 1 && got == want && orbit.candidates_examined == 8 && orbit.tuples.size() == 2 &&
            s < kPipelineSeconds;
  std::string rad;
  for (auto& x : got) rad += (rad.empty() ? "" : ", ") + x;
  return {ok, std::to_string(set.equilibria.size()) + " equilibrium (" + rad + "), " +
                  std::to_string(orbit.candidates_examined) + " candidates, " + std::to_string(orbit.tuples.size()) +
                  " certified, " + fmt_seconds(s)};
}

Outcome membership() {
  bool ok = true;
  std::string detail;
  auto timed = [&](const std::string& name, const std::function<bool(const MembershipVerdict&)>& check) {
    Game g = fixture(name);
    auto t0 = std::chrono::steady_clock::now();
    auto v = decide_membership(g);
    double s = seconds_since(t0);
    bool good = check(v) && s < kMembershipSeconds;
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + name + " " + to_string(v.verdict) + (v.shape_fast_path ? " (shape)" : "") +
              " " + fmt_seconds(s) + (good ? "" : " WRONG");
  };
  timed("table1.json", [](const MembershipVerdict& v) { return v.verdict == Verdict::Member && v.shape_fast_path; });
  timed("matching_pennies.json", [](const MembershipVerdict& v) {
    auto h = Rational(1, 2);
    return v.verdict == Verdict::NonMember && v.witness && v.witness->reason == WitnessReason::RationalEquilibrium &&
           v.witness->profile && same_profile(*v.witness->profile, MixedProfile::from_rational({{h, h}, {h, h}}));
  });
  timed("half_payoff.json", [](const MembershipVerdict& v) {
    return v.verdict == Verdict::NonMember && v.witness && v.witness->reason == WitnessReason::NonIntegerPayoff;
  });
  return {ok, detail};
}

struct CorpusStats {
  int checked = 0, disagreements = 0, members = 0, sampled = 0, set_mismatches = 0;
  int resampled_degenerate = 0, resampled_no_univariate = 0, sample_failures = 0;
};

void run_corpus(const std::vector<size_t>& counts, int wanted, std::uint64_t seed, CorpusStats& st) {
  std::mt19937_64 rng(seed);
  while (st.checked < wanted) {
    Game g = random_game(counts, rng);
    std::vector<MixedProfile> eqs;
    try {
      eqs = enumerate_oracle(g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
      ++st.resampled_degenerate;
      continue;
    }
    MembershipVerdict v;
    try {
      v = decide_membership(g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoUnivariate) throw;
      ++st.resampled_no_univariate;
      continue;
    }
    ++st.checked;
    bool has_rational = std::any_of(eqs.begin(), eqs.end(), [](auto& p) { return p.has_rational_coordinate(); });
    bool member = v.verdict == Verdict::Member;
    if (member == has_rational) {
      ++st.disagreements;
      std::cerr << "disagreement: " << game_to_json(g).dump() << "\n";
    }
    if (!member) continue;
    ++st.members;
    SolutionSet set;
    try {
      set = all_equilibria(g);
    } catch (const Error& e) {
      ++st.sample_failures;
      std::cerr << "sample failed (" << e.what() << "): " << game_to_json(g).dump() << "\n";
      continue;
    }
    ++st.sampled;
    std::vector<MixedProfile> irrational;
    for (auto& p : eqs)
      if (!p.has_rational_coordinate()) irrational.push_back(p);
    if (!same_profile_set(set.equilibria, irrational)) {
      ++st.set_mismatches;
      std::cerr << "equilibrium set mismatch: " << game_to_json(g).dump() << "\n";
    }
  }
}

Outcome oracle_equivalence() {
  auto t0 = std::chrono::steady_clock::now();
  CorpusStats pairs, triples;
  run_corpus({2, 2}, kCorpusPairs, kSeedPairs, pairs);
  run_corpus({2, 2, 2}, kCorpusTriples, kSeedTriples, triples);
  double s = seconds_since(t0);
  auto line = [](const char* tag, const CorpusStats& c) {
    std::ostringstream os;
    os << tag << ": " << c.checked << " games, " << c.disagreements << " disagreements, " << c.members << " members, "
       << c.sampled << " sampled, " << c.set_mismatches << " set mismatches, " << c.sample_failures
       << " sample failures, resampled " << c.resampled_degenerate << " degenerate + " << c.resampled_no_univariate
       << " no-univariate";
    return os.str();
  };
  bool ok = pairs.disagreements + triples.disagreements == 0 && pairs.set_mismatches + triples.set_mismatches == 0 &&
            s < kCorpusSeconds;
  return {ok, line("2x2", pairs) + "; " + line("2x2x2", triples) + "; " + fmt_seconds(s)};
}

Outcome numerical_invariants() {
  std::mt19937_64 rng(4242);
  std::string detail;
  bool ok = true;

  // Jacobian against central differences
  int jac_points = 0, jac_bad = 0;
  const Rational h = dyadic_pow2(kFiniteDifferenceStep), tol = dyadic_pow2(kJacobianRelTol);
  for (const char* name : {"table1.json", "outside_unit_cube.json", "matching_pennies.json"}) {
    auto sys = build_game_system(fixture(name), SystemForm::Indifference).polynomials;
    auto J = jacobian(sys);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> x;
      for (size_t i = 0; i < sys.size(); ++i) {
        Rational r(Integer(static_cast<unsigned long>(rng() >> 34)), pow2(30));
        r.canonicalize();
        x.push_back(r);
      }
      ++jac_points;
      auto Jx = J.evaluate(x);
      bool good = true;
      for (size_t r = 0; r < sys.size(); ++r)
        for (size_t c = 0; c < sys.size(); ++c) {
          auto xp = x, xm = x;
          xp[c] += h;
          xm[c] -= h;
          Rational fd = (sys[r].evaluate(xp) - sys[r].evaluate(xm)) / (2 * h);
          if (abs_rat(fd - Jx[r][c]) > tol * std::max(abs_rat(Jx[r][c]), Rational(1))) good = false;
        }
      if (!good) ++jac_bad;
    }
  }
  ok = ok && jac_bad == 0;
  detail += "jacobian " + std::to_string(jac_points - jac_bad) + "/" + std::to_string(jac_points);

  // Newton residual on success
  int newton_runs = 0, newton_bad = 0;
  for (const char* name : {"table1.json", "outside_unit_cube.json"}) {
    NewtonSystem sys(build_game_system(fixture(name), SystemForm::Indifference).polynomials);
    for (long target : {64L, 128L, 200L})
      for (auto& s : start_points(sys.size(), 12)) {
        try {
          auto r = newton_iterate(sys, {s, 0}, target);
          ++newton_runs;
          auto f = sys.values(r.coords);
          if (!f || norm_inf(*f) >= dyadic_pow2(-target / 2)) ++newton_bad;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularJacobian && e.kind() != ErrorKind::DidNotConverge) throw;
        }
      }
  }
  ok = ok && newton_bad == 0 && newton_runs > 0;
  detail += "; newton residual " + std::to_string(newton_runs - newton_bad) + "/" + std::to_string(newton_runs);

  // Lovasz condition, checked from a fresh Gram-Schmidt
  int lattices = 0, lovasz_bad = 0;
  while (lattices < 100) {
    IntegerLattice L;
    for (int r = 0; r < 3; ++r) {
      std::vector<Integer> row;
      for (int c = 0; c < 3; ++c) row.emplace_back(draw(rng, -100, 100));
      L.basis.push_back(row);
    }
    GramSchmidt g0 = gram_schmidt(L);
    if (std::any_of(g0.B.begin(), g0.B.end(), [](const Rational& b) { return b == 0; })) continue;
    ++lattices;
    auto R = lll_reduce(L);
    GramSchmidt gs = gram_schmidt(R);
    bool good = true;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < i; ++j)
        if (abs_rat(gs.mu[i][j]) > Rational(1, 2)) good = false;
    for (size_t k = 1; k < 3; ++k)
      if (gs.B[k] < (Rational(3, 4) - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) good = false;
    Rational vol0 = g0.B[0] * g0.B[1] * g0.B[2], vol1 = gs.B[0] * gs.B[1] * gs.B[2];
    if (vol0 != vol1) good = false;
    if (!good) ++lovasz_bad;
  }
  ok = ok && lovasz_bad == 0;
  detail += "; lovasz " + std::to_string(lattices - lovasz_bad) + "/" + std::to_string(lattices);

  // Sturm counts against the factorisation of products of linear and quadratic factors
  int polys = 0, sturm_bad = 0;
  while (polys < 100) {
    upoly::ZVec prod{Integer(1)};
    long degree = 0, target = draw(rng, 1, 6);
    while (degree < target) {
      if (target - degree >= 2 && draw(rng, 0, 1)) {
        prod = upoly::mul(prod, upoly::ZVec{Integer(draw(rng, -9, 9)), Integer(draw(rng, -9, 9)), Integer(draw(rng, 1, 5))});
        degree += 2;
      } else {
        prod = upoly::mul(prod, upoly::ZVec{Integer(draw(rng, -9, 9)), Integer(draw(rng, 1, 5))});
        degree += 1;
      }
    }
    UniPoly p(prod);
    ++polys;
    int expected = 0;
    bool good = true;
    for (auto& f : factor_over_q(p)) {
      if (f.poly.degree() == 1) {
        expected += 1;
      } else if (f.poly.degree() == 2) {
        Integer disc = f.poly[1] * f.poly[1] - 4 * f.poly[0] * f.poly[2];
        if (disc > 0) expected += 2;
      } else {
        good = false;
      }
    }
    if (!good || count_real_roots(p) != expected || static_cast<int>(isolate_real_roots(squarefree_part(p)).size()) != expected) ++sturm_bad;
  }
  ok = ok && sturm_bad == 0;
  detail += "; sturm " + std::to_string(polys - sturm_bad) + "/" + std::to_string(polys);
  return {ok, detail};
}

Outcome quadratic_round_trip() {
  auto t0 = std::chrono::steady_clock::now();
  const Integer H(kQuadraticBound);
  const long bits = required_precision_bits(2, H);
  KLLParams kp;
  kp.degree_bound = 2;
  kp.height_bound = H;
  long roots = 0, recovered = 0, polys = 0;
  for (long a = 1; a <= kQuadraticBound; ++a)
    for (long b = -kQuadraticBound; b <= kQuadraticBound; ++b)
      for (long c = -kQuadraticBound; c <= kQuadraticBound; ++c) {
        Integer disc = Integer(b) * b - 4 * Integer(a) * c;
        if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;  // no real root, or reducible
        if (gcd(gcd(Integer(a), Integer(b)), Integer(c)) != 1) continue;    // count each polynomial once
        ++polys;
        const UniPoly want{c, b, a};
        // sqrt(disc) to bits + 8 fractional bits, then each root rounded to `bits`
        Integer scaled = disc * pow2(2 * (bits + 8)), s;
        mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
        Rational root_disc = Rational(s) * dyadic_pow2(-(bits + 8));
        for (int sign : {-1, 1}) {
          Rational x = round_dyadic((Rational(-b) + sign * root_disc) / Rational(2 * a), bits);
          ++roots;
          try {
            if (minimal_polynomial(x, kp, bits) == want) ++recovered;
          } catch (const Error&) {
          }
        }
      }
  double s = seconds_since(t0);
  return {recovered == roots, std::to_string(recovered) + "/" + std::to_string(roots) + " roots of " +
                                  std::to_string(polys) + " quadratics at " + std::to_string(bits) + " bits, " +
                                  fmt_seconds(s)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 reconstruction chain", reconstruction_chain},   {"2 orientation pinning", orientation_pinning},
      {"3 rational rejection", rational_rejection},       {"4 end-to-end pipeline", end_to_end},
      {"5 membership", membership},                       {"6 oracle equivalence", oracle_equivalence},
      {"7 numerical invariants", numerical_invariants},   {"8 quadratic round trip", quadratic_round_trip},
  };
  int failed = 0;
  for (auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
