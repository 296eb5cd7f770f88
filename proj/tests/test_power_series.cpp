#include <zetacf/power_series.hpp>

#include <gtest/gtest.h>

using namespace zetacf;

TEST(PowerSeries, GeometricInverse) {
  RationalSeries one_minus_y(10, {Rational(1), Rational(-1)});
  EXPECT_EQ(one_minus_y.inverse(), geometric(10));
  EXPECT_EQ(one_minus_y * geometric(10), RationalSeries::constant(10, 1));
}

TEST(PowerSeries, InverseNeedsUnitConstant) {
  RationalSeries y = RationalSeries::monomial(5, 1, 1);
  EXPECT_THROW((void)y.inverse(), std::domain_error);
}

TEST(PowerSeries, DerivativeOfLog) {
  // d/dy log(1-y) = -1/(1-y)
  EXPECT_EQ(log_one_minus(12).derivative(), -geometric(11));
}

TEST(PowerSeries, ExpLogRoundTripByNewtonFreeIdentity) {
  // (1-y) * d/dy[-log(1-y)] = 1
  const std::size_t n = 20;
  RationalSeries l = -log_one_minus(n);
  RationalSeries lhs = RationalSeries(n - 1, {Rational(1), Rational(-1)}) * l.derivative();
  EXPECT_EQ(lhs, RationalSeries::constant(n - 1, 1));
}

TEST(PowerSeries, ShiftsAndScaling) {
  RationalSeries s(4, {1, 2, 3, 4, 5});
  EXPECT_EQ(s.shifted_up(2)[2], 1);
  EXPECT_EQ(s.shifted_up(2).shifted_down(2), s);
  EXPECT_THROW((void)s.shifted_down(1), std::domain_error);
  EXPECT_EQ(s.scaled_variable(2)[3], 32);
  EXPECT_EQ(s.pow(2), s * s);
  EXPECT_EQ(s.truncated(2).order(), 2U);
}

TEST(PowerSeries, BivariateInverseOverPolynomials) {
  // 1 / (1 - z y) = sum z^n y^n
  const Polynomial z = Polynomial::monomial(1);
  BivariateSeries s(6, {Polynomial(1), -z});
  BivariateSeries inv = s.inverse();
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(inv[n], Polynomial::monomial(n));
  // non-constant leading coefficient is not a unit
  BivariateSeries bad(3, {z});
  EXPECT_THROW((void)bad.inverse(), std::domain_error);
}

TEST(PowerSeries, ValuationAndRingScaling) {
  const Polynomial z = Polynomial::monomial(1);
  BivariateSeries s = BivariateSeries::monomial(5, 3, Polynomial(2));
  EXPECT_EQ(s.valuation(), 3U);
  EXPECT_EQ((z * s)[3], z * Rational(2));
}
