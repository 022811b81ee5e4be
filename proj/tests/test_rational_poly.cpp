#include <gtest/gtest.h>

#include "ipie/multipoly.hpp"
#include "ipie/rational.hpp"

using namespace ipie;

TEST(Rational, ParsesDecimalsAndFractionsExactly) {
  EXPECT_EQ(*parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(*parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(*parse_rational("1e-2"), Rational(1, 100));
  EXPECT_EQ(*parse_rational("7"), Rational(7));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational("1/0"));
}

TEST(Rational, DecimalAccuracyFollowsDigitCount) {
  // ten fractional digits carry about 33 bits
  EXPECT_EQ(decimal_accuracy_bits("0.7282202113"), 34);
  EXPECT_EQ(decimal_accuracy_bits("0.5"), 4);
}

TEST(Rational, DecimalRenderingRoundsHalfToEven) {
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_decimal(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4), "-0.3333");
  EXPECT_EQ(to_decimal(Rational(2), 3), "2.000");
}

TEST(Rational, DyadicRounding) {
  Rational third(1, 3);
  Rational r = round_dyadic(third, 10);
  EXPECT_LE(abs_rat(r - third), dyadic_pow2(-11));
  EXPECT_LE(floor_dyadic(third, 10), third);
  EXPECT_GE(ceil_dyadic(third, 10), third);
  EXPECT_EQ(bit_length(Integer(4)), 3);
}

TEST(MultiPoly, CanonicalFormDropsZeros) {
  auto p = parse_poly("x*y - y*x + 3", {"x", "y"});
  EXPECT_TRUE(p.is_constant());
  EXPECT_EQ(p.constant_term(), Rational(3));
  EXPECT_EQ(parse_poly("x + y", {"x", "y"}), parse_poly("y + x", {"x", "y"}));
}

TEST(MultiPoly, ArithmeticAndPrinting) {
  const std::vector<std::string> xy{"x", "y"}, x1{"x"};
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto p = (x + y) * (x - y);
  EXPECT_EQ(p, parse_poly("x^2 - y^2", {"x", "y"}));
  EXPECT_EQ(p.to_string(xy), "x^2 - y^2");
  EXPECT_EQ(parse_poly("5*x^2 - 16*x + 9", x1).to_string(x1), "5*x^2 - 16*x + 9");
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_EQ(p.degree_in(1), 2u);
}

TEST(MultiPoly, SubstituteAndDerivative) {
  auto p = parse_poly("x*y^2 + 3*x - 1", {"x", "y"});
  EXPECT_EQ(p.substitute(1, Rational(2)), parse_poly("7*x - 1", {"x", "y"}));
  EXPECT_EQ(p.derivative(1), parse_poly("2*x*y", {"x", "y"}));
  std::vector<Rational> pt{Rational(1, 2), Rational(3)};
  EXPECT_EQ(p.evaluate(pt), Rational(1, 2) * 9 + Rational(3, 2) - 1);
}

TEST(MultiPoly, ArityMismatchIsRejected) {
  auto a = MultiPoly::variable(2, 0);
  auto b = MultiPoly::variable(3, 0);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(MultiPoly::variable(2, 5), Error);
}

TEST(MultiPoly, ParserRejectsUnknownNames) {
  EXPECT_THROW(parse_poly("x + q", {"x"}), Error);
  EXPECT_THROW(parse_poly("x +", {"x"}), Error);
}

TEST(MonomialOrder, LowestVariableComesLast) {
  auto o = MonomialOrder::with_lowest(3, 1);
  EXPECT_EQ(o.lowest(), 1u);
  EXPECT_EQ(MonomialOrder::lex(3).lowest(), 2u);
  EXPECT_EQ(MonomialOrder({2, 0, 1}).lowest(), 1u);
}
