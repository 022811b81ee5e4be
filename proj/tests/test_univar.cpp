#include <gtest/gtest.h>

#include <random>

#include "ipie/factor.hpp"
#include "ipie/unipoly.hpp"

using namespace ipie;

namespace {

const UniPoly kEliminant{0, 3, -11, 7, 1};  // y^4 + 7y^3 - 11y^2 + 3y
const UniPoly kQuadY{-3, 8, 1};             // y^2 + 8y - 3

std::vector<UniPoly> factor_polys(const UniPoly& p) {
  std::vector<UniPoly> out;
  for (auto& f : factor_over_q(p)) out.push_back(f.poly);
  return out;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace

TEST(Squarefree, RemovesRepeatedFactors) {
  EXPECT_EQ(squarefree_part(UniPoly{1, -2, 1}), (UniPoly{-1, 1}));
  EXPECT_EQ(squarefree_part(kEliminant), kEliminant);
  EXPECT_EQ(squarefree_part(UniPoly{-2, 0, 1}), (UniPoly{-2, 0, 1}));
  EXPECT_FALSE(is_squarefree(UniPoly{1, -2, 1}));
  EXPECT_TRUE(is_squarefree(kEliminant));
}

TEST(RationalRoots, EliminantHasZeroAndOne) {
  EXPECT_EQ(rational_roots(kEliminant), (std::vector<Rational>{0, 1}));
  EXPECT_TRUE(rational_roots(kQuadY).empty());
  EXPECT_EQ(rational_roots(UniPoly{-4, 0, 1}), (std::vector<Rational>{-2, 2}));
  EXPECT_EQ(rational_roots(UniPoly{-1, 2}), (std::vector<Rational>{Rational(1, 2)}));
}

TEST(Factor, EliminantSplitsIntoThree) {
  auto fs = factor_over_q(kEliminant);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].poly, (UniPoly{0, 1}));
  EXPECT_EQ(fs[1].poly, (UniPoly{-1, 1}));
  EXPECT_EQ(fs[2].poly, kQuadY);
  for (auto& f : fs) EXPECT_EQ(f.multiplicity, 1);
}

TEST(Factor, ClassicalExamples) {
  EXPECT_EQ(factor_polys(UniPoly{-2, 0, 1}), (std::vector<UniPoly>{UniPoly{-2, 0, 1}}));
  EXPECT_EQ(factor_polys(UniPoly{-1, 0, 0, 0, 1}),
            (std::vector<UniPoly>{UniPoly{-1, 1}, UniPoly{1, 1}, UniPoly{1, 0, 1}}));
  auto sq = factor_over_q(UniPoly{1, -2, 1});
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].multiplicity, 2);
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
  // x^4 - 10x^2 + 1 splits modulo every prime
  EXPECT_TRUE(is_irreducible(UniPoly{1, 0, -10, 0, 1}));
  EXPECT_FALSE(is_irreducible(UniPoly{-1, 0, 0, 0, 1}));
}

TEST(Factor, ProductOfKnownFactorsRecovered) {
  UniPoly a{-3, 0, 1}, b{1, 1, 1}, c{2, -5};
  UniPoly p(upoly::mul(upoly::mul(a.coeffs(), b.coeffs()), upoly::mul(c.coeffs(), c.coeffs())));
  auto fs = factor_over_q(p);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].poly, c);
  EXPECT_EQ(fs[0].multiplicity, 2);
  EXPECT_EQ(fs[1].poly, b);
  EXPECT_EQ(fs[2].poly, a);
}

TEST(Isolate, QuadraticRootsSeparated) {
  auto ivs = isolate_real_roots(kQuadY);
  ASSERT_EQ(ivs.size(), 2u);
  const Rational near_neg(-83589, 10000), near_pos(3589, 10000);
  EXPECT_TRUE(ivs[0].lo <= near_neg + Rational(1, 100) && ivs[0].hi >= near_neg - Rational(1, 100));
  auto fine = refine_interval(kQuadY, ivs[1], Rational(1, 1000000));
  EXPECT_LT(fine.lo, near_pos);
  EXPECT_GT(fine.hi, Rational(35889, 100000));
  EXPECT_TRUE(isolate_real_roots(UniPoly{1, 0, 1}).empty());
  auto sqrt2 = isolate_real_roots(UniPoly{-2, 0, 1});
  ASSERT_EQ(sqrt2.size(), 2u);
  EXPECT_LE(sqrt2[0].hi, 0);
  EXPECT_GE(sqrt2[1].lo, 0);
}

TEST(Isolate, IntervalsAreDisjointAndCertified) {
  UniPoly p{0, 3, -11, 7, 1};
  auto ivs = isolate_real_roots(p);
  ASSERT_EQ(ivs.size(), 4u);
  // open intervals; neighbours may share an endpoint that is not a root
  for (size_t i = 0; i + 1 < ivs.size(); ++i) EXPECT_LE(ivs[i].hi, ivs[i + 1].lo);
  for (auto& iv : ivs) {
    if (iv.lo == iv.hi) {
      EXPECT_EQ(p.sign_at(iv.lo), 0);
    } else {
      EXPECT_EQ(sturm_count(p, iv.lo, iv.hi), 1);
    }
  }
}

TEST(Sturm, CountsOnIntervals) {
  EXPECT_EQ(sturm_count(UniPoly{-2, 0, 1}, 0, 2), 1);
  EXPECT_EQ(sturm_count(kQuadY, 0, 1), 1);
  EXPECT_EQ(sturm_count(UniPoly{1, 0, 1}, -10, 10), 0);
  EXPECT_THROW(sturm_count(UniPoly{-1, 1}, 1, 2), Error);
}

// Products of random linear and quadratic factors: the distinct real roots
// seen by Sturm must match what the factorisation predicts.
TEST(Sturm, RealRootCountMatchesFactorisation) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    upoly::ZVec prod{Integer(1)};
    const long pieces = draw(rng, 1, 3);
    long degree = 0;
    for (long k = 0; k < pieces && degree < 6; ++k) {
      if (degree <= 4 && draw(rng, 0, 1) == 1) {
        upoly::ZVec q{Integer(draw(rng, -9, 9)), Integer(draw(rng, -9, 9)), Integer(draw(rng, 1, 5))};
        prod = upoly::mul(prod, q);
        degree += 2;
      } else {
        upoly::ZVec l{Integer(draw(rng, -9, 9)), Integer(draw(rng, 1, 5))};
        prod = upoly::mul(prod, l);
        degree += 1;
      }
    }
    UniPoly p(prod);
    int expected = 0;
    for (auto& f : factor_over_q(p)) {
      const auto& c = f.poly.coeffs();
      if (f.poly.degree() == 1) {
        expected += 1;
      } else if (f.poly.degree() == 2) {
        Integer disc = c[1] * c[1] - 4 * c[0] * c[2];
        if (disc > 0) expected += 2;
      } else {
        ADD_FAILURE() << "unexpected factor degree in " << p.to_string();
      }
    }
    EXPECT_EQ(count_real_roots(p), expected) << p.to_string();
    EXPECT_EQ(static_cast<int>(isolate_real_roots(squarefree_part(p)).size()), expected) << p.to_string();
  }
}
