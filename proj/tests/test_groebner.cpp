#include <gtest/gtest.h>

#include <algorithm>

#include "ipie/game.hpp"
#include "ipie/groebner.hpp"

using namespace ipie;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly P(const std::string& s) { return parse_poly(s, kXY); }

Game table1() {
  return Game::from_integers({2, 2, 2}, {{3, 0, 0, 1, 1, 0, 0, 2}, {0, 1, 2, 0, 0, 3, 1, 0}, {2, 0, 0, 0, 0, 0, 0, 3}});
}

GroebnerBasis table1_basis() {
  return buchberger(complementarity_in_free_vars(table1()), MonomialOrder({2, 0, 1}));
}

const UniPoly kEliminant{0, 3, -11, 7, 1};

}  // namespace

TEST(Divide, DifferenceOfSquares) {
  auto r = multivariate_divide(P("x^2 - 1"), {P("x - 1")}, MonomialOrder::lex(2));
  ASSERT_EQ(r.quotients.size(), 1u);
  EXPECT_EQ(r.quotients[0], P("x + 1"));
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Divide, CommonFactor) {
  auto r = multivariate_divide(P("x*y - x"), {P("y - 1")}, MonomialOrder({1, 0}));
  EXPECT_EQ(r.quotients[0], P("x"));
  EXPECT_TRUE(r.remainder.is_zero());
}

TEST(Divide, TwoDivisorsIdentityAndRemainder) {
  MultiPoly f = P("x^2*y + x*y^2 + y^2");
  std::vector<MultiPoly> d{P("x*y - 1"), P("y^2 - 1")};
  auto r = multivariate_divide(f, d, MonomialOrder::lex(2));
  EXPECT_EQ(r.remainder, P("x + y + 1"));
  MultiPoly back = r.remainder;
  for (size_t i = 0; i < d.size(); ++i) back = back + r.quotients[i] * d[i];
  EXPECT_EQ(back, f);
}

TEST(SPolynomial, Examples) {
  auto lex = MonomialOrder::lex(2);
  EXPECT_TRUE(s_polynomial(P("x^2 - 1"), P("x^2 - 1"), lex).is_zero());
  EXPECT_TRUE(s_polynomial(P("x"), P("y"), lex).is_zero());
  EXPECT_EQ(s_polynomial(P("x^2 - 1"), P("x*y - 1"), lex), P("x - y"));
}

TEST(Buchberger, ReducedBasisIsFixedPoint) {
  auto gb = buchberger({P("x - 1"), P("y - 2")}, MonomialOrder::lex(2));
  ASSERT_EQ(gb.generators.size(), 2u);
  EXPECT_EQ(gb.generators[0], P("x - 1"));
  EXPECT_EQ(gb.generators[1], P("y - 2"));
}

TEST(Buchberger, CircleAndDiagonal) {
  auto gb = buchberger({P("x^2 + y^2 - 1"), P("x - y")}, MonomialOrder::lex(2));
  EXPECT_EQ(eliminate_to_univariate(gb, 1), (UniPoly{-1, 0, 2}));
  EXPECT_TRUE(ideal_contains(gb, P("x^2 - 1/2")));
  EXPECT_TRUE(is_zero_dimensional(gb));
}

TEST(Buchberger, InconsistentSystemGivesUnit) {
  auto gb = buchberger({P("x - 1"), P("x - 2")}, MonomialOrder::lex(2));
  EXPECT_TRUE(gb.is_unit());
}

TEST(Eliminate, SingleVariable) {
  std::vector<std::string> x{"x"};
  auto gb = buchberger({parse_poly("x - 3", x)}, MonomialOrder::lex(1));
  EXPECT_EQ(eliminate_to_univariate(gb, 0), (UniPoly{-3, 1}));
}

TEST(Eliminate, RequiresLowestVariableAndZeroDimension) {
  auto gb = buchberger({P("x*y")}, MonomialOrder::lex(2));
  EXPECT_THROW(eliminate_to_univariate(gb, 0), Error);
  try {
    eliminate_to_univariate(gb, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUnivariate);
  }
}

TEST(Eliminate, Table1ComplementarityGivesQuarticInY) {
  EXPECT_EQ(eliminate_to_univariate(table1_basis(), 1), kEliminant);
  auto alt = buchberger(complementarity_in_free_vars(table1()), MonomialOrder::with_lowest(3, 1));
  EXPECT_EQ(eliminate_to_univariate(alt, 1), kEliminant);
}

TEST(Triangular, Table1FibresOverRationalRoots) {
  auto gb = table1_basis();
  auto f0 = rational_fibre(gb, 1, 0);
  EXPECT_EQ(f0.isolated_points, (std::vector<std::vector<Rational>>{{0, 0, 0}}));
  auto f1 = rational_fibre(gb, 1, 1);
  EXPECT_EQ(f1.isolated_points, (std::vector<std::vector<Rational>>{{1, 1, 1}}));
  EXPECT_THROW(triangular_substitute(gb, 1, 2), Error);
}

TEST(Triangular, DirectSubstitution) {
  auto gb = buchberger({P("y^2 - 1"), P("x - y")}, MonomialOrder::lex(2));
  auto pieces = triangular_substitute(gb, 1, 1);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(rational_points(pieces[0]), (std::vector<std::vector<Rational>>{{1, 1}}));
}

TEST(RationalPoints, BackSubstitution) {
  auto gb = buchberger({P("x^2 - 1"), P("y - x")}, MonomialOrder::lex(2));
  EXPECT_EQ(rational_points(gb), (std::vector<std::vector<Rational>>{{-1, -1}, {1, 1}}));
}

// Every way of reading the table's three axes as players and the payoff
// triple positions as players; the pinned reading must reproduce the quartic.
TEST(Orientation, PinnedReadingReproducesQuartic) {
  const int cell[2][2][2][3] = {{{{3, 0, 2}, {0, 2, 0}}, {{0, 1, 0}, {1, 0, 0}}},
                                {{{1, 0, 0}, {0, 1, 0}}, {{0, 3, 0}, {2, 0, 3}}}};
  std::vector<int> axis{0, 1, 2};
  std::vector<std::string> matches;
  do {
    std::vector<int> slot{0, 1, 2};
    do {
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
        std::string tag;
        for (int i = 0; i < 3; ++i) tag += std::to_string(axis[i]);
        tag += "/";
        for (int i = 0; i < 3; ++i) tag += std::to_string(slot[i]);
        matches.push_back(tag);
        if (tag == "021/012") {
          EXPECT_EQ(g.payoffs(), table1().payoffs());
        }
      }
    } while (std::next_permutation(slot.begin(), slot.end()));
  } while (std::next_permutation(axis.begin(), axis.end()));
  EXPECT_NE(std::find(matches.begin(), matches.end(), "021/012"), matches.end());
  EXPECT_EQ(matches.size(), 2u);
}
