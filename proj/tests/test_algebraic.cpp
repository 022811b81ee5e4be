#include <gtest/gtest.h>

#include "ipie/algebraic.hpp"
#include "ipie/certify.hpp"
#include "ipie/game.hpp"
#include "ipie/realsolve.hpp"

using namespace ipie;

namespace {

const UniPoly kSqrt2{-2, 0, 1};
const UniPoly kQuadX{9, -16, 5}, kQuadY{-3, 8, 1}, kQuadZ{-3, 4, 5};

AlgebraicNumber in(const UniPoly& p, Rational lo, Rational hi) { return AlgebraicNumber(p, {lo, hi}); }

Game table1() {
  return Game::from_integers({2, 2, 2}, {{3, 0, 0, 1, 1, 0, 0, 2}, {0, 1, 2, 0, 0, 3, 1, 0}, {2, 0, 0, 0, 0, 0, 0, 3}});
}

std::vector<AlgebraicNumber> irrational_point() {
  return {in(kQuadX, 0, 1), in(kQuadY, 0, 1), in(kQuadZ, 0, 1)};
}

}  // namespace

TEST(AlgebraicNumber, ConstructionChecks) {
  EXPECT_THROW(in(UniPoly{-1, 0, 1}, 0, 2), Error);  // reducible
  EXPECT_THROW(in(kSqrt2, -2, 2), Error);            // two roots inside
  EXPECT_NO_THROW(in(kSqrt2, 1, 2));
}

TEST(Refine, ShrinksWidthAndKeepsRoot) {
  auto a = in(kSqrt2, 1, 2);
  auto r = a.refine(10);
  EXPECT_LE(r.interval().width() * 1024, a.interval().width());
  EXPECT_EQ(sturm_count(kSqrt2, r.interval().lo, r.interval().hi), 1);

  auto y = in(kQuadY, 0, 1).refine(30);
  Rational approx(3588989435, 10000000000);
  EXPECT_LE(y.interval().lo, approx + Rational(1, 10000000000));
  EXPECT_GE(y.interval().hi, approx - Rational(1, 10000000000));
  EXPECT_LT(y.interval().width(), Rational(1, 1000000000));
}

TEST(Refine, RationalCollapsesOnValue) {
  AlgebraicNumber h(UniPoly{-1, 2}, {Rational(0), Rational(1)});
  auto r = h.refine(20);
  EXPECT_TRUE(r.interval().lo <= Rational(1, 2) && Rational(1, 2) <= r.interval().hi);
  EXPECT_LE(r.interval().width(), Rational(1, 1 << 20));
  EXPECT_EQ(h.rational_value(), Rational(1, 2));
}

TEST(Conjugates, RealRootsAscending) {
  auto o = conjugates(kQuadY);
  ASSERT_EQ(o.roots.size(), 2u);
  EXPECT_LT(o.roots[0].compare(Rational(-8)), 0);
  EXPECT_GT(o.roots[1].compare(Rational(0)), 0);
  EXPECT_EQ(to_radicals(o.roots[0]).to_string(), "(-4 + -1*sqrt(19))/1");
  EXPECT_EQ(to_radicals(o.roots[1]).to_string(), "(-4 + 1*sqrt(19))/1");
  auto s = conjugates(kSqrt2);
  ASSERT_EQ(s.roots.size(), 2u);
  EXPECT_EQ(s.roots[0], -s.roots[1]);
  auto h = conjugates(UniPoly{-1, 2});
  ASSERT_EQ(h.roots.size(), 1u);
  EXPECT_EQ(h.roots[0].rational_value(), Rational(1, 2));
  EXPECT_THROW(conjugates(UniPoly{-1, 0, 1}), Error);
}

TEST(Conjugates, CubicWithOneRealRoot) {
  EXPECT_EQ(conjugates(UniPoly{-2, 0, 0, 1}).roots.size(), 1u);
}

TEST(Compare, OrdersAndEquality) {
  auto r2 = in(kSqrt2, 1, 2);
  EXPECT_EQ(r2, in(kSqrt2, Rational(5, 4), Rational(3, 2)));
  EXPECT_LT(r2.compare(Rational(3, 2)), 0);
  EXPECT_GT(r2.compare(Rational(7, 5)), 0);
  EXPECT_LT(in(kQuadY, 0, 1), r2);
  auto om = in(kQuadX, 0, 1).one_minus();
  EXPECT_GT(om.compare(Rational(27, 100)), 0);
  EXPECT_LT(om.compare(Rational(28, 100)), 0);
}

TEST(SignAt, Examples) {
  std::vector<std::string> x{"x"};
  std::vector<AlgebraicNumber> pt{in(kSqrt2, 1, 2)};
  EXPECT_EQ(sign_at(pt, parse_poly("x^2 - 2", x)), 0);
  EXPECT_EQ(sign_at(pt, parse_poly("x - 1", x)), 1);
  EXPECT_EQ(sign_at(pt, parse_poly("x - 3/2", x)), -1);
}

TEST(SignAt, Table1IndifferenceVanishesAtIrrationalPoint) {
  auto pt = irrational_point();
  for (auto& p : build_game_system(table1(), SystemForm::Indifference).polynomials) EXPECT_EQ(sign_at(pt, p), 0);
  std::vector<AlgebraicNumber> bad = pt;
  bad[0] = in(kQuadX, 2, 3);
  int nonzero = 0;
  for (auto& p : build_game_system(table1(), SystemForm::Indifference).polynomials)
    if (sign_at(bad, p) != 0) ++nonzero;
  EXPECT_GT(nonzero, 0);
}

TEST(SignAt, MixedFieldsCancelExactly) {
  // sqrt2 and -sqrt2 in separate coordinates
  std::vector<std::string> xy{"x", "y"};
  std::vector<AlgebraicNumber> pt{in(kSqrt2, 1, 2), in(kSqrt2, -2, -1)};
  EXPECT_EQ(sign_at(pt, parse_poly("x + y", xy)), 0);
  EXPECT_EQ(sign_at(pt, parse_poly("x*y + 2", xy)), 0);
  EXPECT_EQ(sign_at(pt, parse_poly("x - y", xy)), 1);
}

TEST(CertifyBox, ScalarExamples) {
  std::vector<MultiPoly> sys{parse_poly("x^2 - 2", {"x"})};
  EXPECT_TRUE(certify_box(sys, {{Interval{Rational(5, 4), Rational(3, 2)}}}));
  EXPECT_FALSE(certify_box(sys, {{Interval{Rational(1, 10), Rational(2, 10)}}}));
}

TEST(CertifyBox, Table1AroundIrrationalPoint) {
  auto sys = build_game_system(table1(), SystemForm::Indifference).polynomials;
  EXPECT_TRUE(certify_box(sys, box_around(irrational_point(), 40)));
  auto off = irrational_point();
  off[1] = in(kQuadY, -9, -8);
  EXPECT_FALSE(certify_box(sys, box_around(off, 40)));
}

TEST(Radicals, Table1Coordinates) {
  auto pt = irrational_point();
  EXPECT_EQ(to_radicals(pt[0]).to_string(), "(8 + -1*sqrt(19))/5");
  EXPECT_EQ(to_radicals(pt[1]).to_string(), "(-4 + 1*sqrt(19))/1");
  EXPECT_EQ(to_radicals(pt[2]).to_string(), "(-2 + 1*sqrt(19))/5");
  EXPECT_EQ(to_radicals(AlgebraicNumber(Rational(1, 2))).to_string(), "1/2");
}

TEST(Radicals, ApproximationMatchesInterval) {
  for (auto& a : irrational_point()) {
    Rational v = to_radicals(a).approx(80);
    auto e = a.enclosure(60);
    EXPECT_TRUE(e.lo - dyadic_pow2(-70) <= v && v <= e.hi + dyadic_pow2(-70));
  }
}

TEST(Radicals, CommonFactorCancelled) {
  // x^2 - 12: the 2 in 2*sqrt3 cancels against 2a, leaving sqrt(12)/1
  auto r = to_radicals(in(UniPoly{-12, 0, 1}, 3, 4));
  EXPECT_EQ(r.to_string(), "(0 + 1*sqrt(12))/1");
  EXPECT_THROW(to_radicals(conjugates(UniPoly{-2, 0, 0, 1}).roots[0]), Error);
}

TEST(RealRoots, FilterAndFactorisation) {
  UniPoly eliminant{0, 3, -11, 7, 1};
  EXPECT_EQ(real_roots(eliminant).size(), 4u);
  auto open = real_roots(eliminant, RootFilter{0, 1, true});
  ASSERT_EQ(open.size(), 1u);
  EXPECT_EQ(open[0], in(kQuadY, 0, 1));
  EXPECT_EQ(real_roots(eliminant, RootFilter{0, 1, false}).size(), 3u);
}

TEST(RealSolutions, CircleAndLine) {
  std::vector<std::string> xy{"x", "y"};
  auto sols = real_solutions({parse_poly("x^2 + y^2 - 1", xy), parse_poly("x - y", xy)}, 2);
  ASSERT_EQ(sols.size(), 2u);
  for (auto& s : sols) EXPECT_EQ(s[0], s[1]);
  EXPECT_THROW(real_solutions({parse_poly("x*y", xy)}, 2), Error);
}
