#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"
#include "vogelcas/ratfun.hpp"

namespace vogelcas {
namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = testing::random_rational(rng, 6, 3);
  return Poly(std::move(c));
}

// A denominator with a nonzero constant term.
Poly random_den(std::mt19937& rng, int max_degree) {
  Poly p;
  do p = random_poly(rng, max_degree);
  while (p[0].is_zero());
  return p;
}

const Poly kOne{1};

TEST(RatFunTest, Sl3NormalForm) {
  // (4-64z)(4-16z)(4-9z) / ((4-4z)^2 (4-9z)) = (1-16z)(1-4z)/(1-z)^2.
  const Poly num = Poly{4, -64} * Poly{4, -16} * Poly{4, -9};
  const Poly den = Poly{4, -4} * Poly{4, -4} * Poly{4, -9};
  const RatFun f = normalize(num, den);
  EXPECT_EQ(f.num(), (Poly{1, -20, 64}));
  EXPECT_EQ(f.den(), (Poly{1, -2, 1}));
}

TEST(RatFunTest, ZeroNumerator) {
  const RatFun f = normalize(Poly(), Poly{1, 1});
  EXPECT_TRUE(f.num().is_zero());
  EXPECT_EQ(f.den(), kOne);
}

TEST(RatFunTest, ConstantAfterCancellation) {
  const RatFun f = normalize(Poly{2, 2}, Poly{1, 1});
  EXPECT_EQ(f.num(), Poly(2));
  EXPECT_EQ(f.den(), kOne);
}

TEST(RatFunTest, ZeroDenominatorThrows) {
  EXPECT_THROW(normalize(Poly{1}, Poly()), std::domain_error);
}

TEST(RatFunTest, DenominatorIsMonicAndCoprime) {
  const RatFun f(Poly{3, 6}, Poly{-4, 0, 2});
  EXPECT_EQ(f.den().lead(), Rational(1));
  EXPECT_EQ(gcd(f.num(), f.den()), kOne);
}

TEST(RatFunTest, Sl2PartialFractionDifference) {
  // 72z/(64-36z) - 8z/(64-4z) = 256z/((16-9z)(16-z)).
  const RatFun a(Poly{0, 72}, Poly{64, -36});
  const RatFun b(Poly{0, 8}, Poly{64, -4});
  EXPECT_EQ(a - b, RatFun(Poly{0, 256}, Poly{16, -9} * Poly{16, -1}));
}

TEST(RatFunTest, MultiplicativeInverse) {
  const RatFun a(Poly{1, -9}, Poly{1, -1});
  EXPECT_EQ(a * (RatFun(1) / a), RatFun(1));
}

TEST(RatFunTest, TwoOkuboTerms) {
  // 1/(1+z) + 1/(1+z/2) = (2 + 3z/2)/((1+z)(1+z/2)).
  const RatFun sum = RatFun(kOne, Poly{1, 1}) + RatFun(kOne, Poly{1, Rational(1, 2)});
  EXPECT_EQ(sum, RatFun(Poly{2, Rational(3, 2)}, Poly{1, 1} * Poly{1, Rational(1, 2)}));
}

TEST(RatFunTest, DivisionByZeroFunctionThrows) {
  EXPECT_THROW(RatFun(Poly{1, 1}) / RatFun(), std::domain_error);
}

TEST(RatFunTest, SeriesOfSl2Product) {
  const auto s = series_expand(RatFun(Poly{1, -9}, Poly{1, -1}), 3);
  EXPECT_EQ(s, (std::vector<Rational>{1, -8, -8, -8}));
}

TEST(RatFunTest, SeriesGeometric) {
  EXPECT_EQ(series_expand(RatFun(kOne, Poly{1, -1}), 2), (std::vector<Rational>{1, 1, 1}));
}

TEST(RatFunTest, SeriesOfSl2CanonicalGenfun) {
  const RatFun f(Poly{0, 256}, Poly{16, -9} * Poly{16, -1});
  EXPECT_EQ(series_expand(f, 2), (std::vector<Rational>{0, 1, Rational(5, 8)}));
}

TEST(RatFunTest, SeriesPoleAtOriginThrows) {
  EXPECT_THROW(series_expand(RatFun(kOne, Poly{0, 1}), 3), std::domain_error);
}

TEST(RatFunTest, SeriesMatchesGeometricOracle) {
  // 3/(1-2z) - (1/2)/(1+z/3), compared term-wise against sum c a^k.
  const RatFun f = RatFun(Poly(3), Poly{1, -2}) - RatFun(Poly(Rational(1, 2)), Poly{1, Rational(1, 3)});
  const auto s = series_expand(f, 8);
  for (int k = 0; k <= 8; ++k)
    EXPECT_EQ(s[static_cast<std::size_t>(k)],
              testing::geometric_sum({{3, 2}, {Rational(-1, 2), Rational(-1, 3)}}, k));
}

TEST(RatFunTest, LimitAtInfinity) {
  EXPECT_EQ(limit_at_infinity(RatFun(Poly{1, -9}, Poly{1, -1})), Rational(9));
  EXPECT_EQ(limit_at_infinity(RatFun(kOne, Poly{1, 1})), Rational(0));
  EXPECT_EQ(limit_at_infinity(RatFun(Poly{1, -20, 64}, Poly{1, -2, 1})), Rational(64));
  EXPECT_THROW(limit_at_infinity(RatFun(Poly{0, 0, 1}, Poly{1, 1})), std::domain_error);
}

TEST(RatFunTest, LimitMatchesReversedSeriesAtZero) {
  // f(1/w) with numerator and denominator multiplied by w^deg(den), at w = 0.
  for (const RatFun& f : {RatFun(Poly{1, -9}, Poly{1, -1}), RatFun(kOne, Poly{1, 1}),
                          RatFun(Poly{1, -20, 64}, Poly{1, -2, 1})}) {
    const int d = f.den().degree();
    std::vector<Rational> num(static_cast<std::size_t>(d) + 1), den(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= f.num().degree(); ++i) num[static_cast<std::size_t>(d - i)] = f.num()[static_cast<std::size_t>(i)];
    for (int i = 0; i <= d; ++i) den[static_cast<std::size_t>(d - i)] = f.den()[static_cast<std::size_t>(i)];
    const RatFun reversed(Poly(std::move(num)), Poly(std::move(den)));
    EXPECT_EQ(series_expand(reversed, 0)[0], limit_at_infinity(f));
  }
}

TEST(RatFunTest, EqualityByCrossProducts) {
  EXPECT_TRUE(equal(RatFun(Poly{2, 2}, Poly{1, 1}), RatFun(2)));
  EXPECT_TRUE(equal(RatFun(Poly{1, -9}, Poly{1, -1}), RatFun(Poly{4, -36}, Poly{4, -4})));
  EXPECT_FALSE(equal(RatFun(Poly{1, -9}, Poly{1, -1}), RatFun(Poly{1, -4}, Poly{1, -1})));
}

TEST(RatFunTest, LogDerivativeOfProduct) {
  // -2z d/dz ln((1-9z)/(1-z)) = 18z/(1-9z) - 2z/(1-z).
  const RatFun f(Poly{1, -9}, Poly{1, -1});
  const RatFun expected = RatFun(Poly{0, 18}, Poly{1, -9}) - RatFun(Poly{0, 2}, Poly{1, -1});
  EXPECT_EQ(log_derivative_series(f), expected);
}

TEST(RatFunPropertyTest, NormalizeIsIdempotent) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFun f(random_poly(rng, 4), random_den(rng, 4));
    EXPECT_EQ(normalize(f.num(), f.den()), f);
  }
}

TEST(RatFunPropertyTest, ProductOverFactorRecoversNumerator) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng, 4);
    const Poly b = random_den(rng, 3);
    EXPECT_EQ(normalize(a * b, b), RatFun(a));
  }
}

TEST(RatFunPropertyTest, SeriesTimesDenominatorReproducesNumerator) {
  std::mt19937 rng(3);
  constexpr std::size_t kOrder = 10;
  for (int trial = 0; trial < 100; ++trial) {
    const RatFun f(random_poly(rng, 4), random_den(rng, 4));
    const auto s = series_expand(f, kOrder);
    for (std::size_t k = 0; k <= kOrder; ++k) {
      Rational conv;
      for (std::size_t j = 0; j <= k; ++j) conv += f.den()[j] * s[k - j];
      EXPECT_EQ(conv, f.num()[k]);
    }
  }
}

TEST(RatFunPropertyTest, ArithmeticAgreesWithPointEvaluation) {
  std::mt19937 rng(4);
  const Rational x(2, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const RatFun a(random_poly(rng, 3), random_den(rng, 3));
    const RatFun b(random_poly(rng, 3), random_den(rng, 3));
    try {
      const Rational av = a.eval(x), bv = b.eval(x);
      EXPECT_EQ((a + b).eval(x), av + bv);
      EXPECT_EQ((a - b).eval(x), av - bv);
      EXPECT_EQ((a * b).eval(x), av * bv);
      if (!bv.is_zero()) EXPECT_EQ((a / b).eval(x), av / bv);
    } catch (const std::domain_error&) {
      // x happened to be a pole.
    }
  }
}

}  // namespace
}  // namespace vogelcas
