#include <zetacf/bigfloat.hpp>
#include <zetacf/polynomial.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace zetacf;

TEST(Rational, LowestTermsAndPositiveDenominator) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ExactStringRoundTrip) {
  EXPECT_EQ(to_exact_string(Rational(5)), "5/1");
  EXPECT_EQ(to_exact_string(make_rational(-11, 6)), "-11/6");
  for (const char* s : {"0/1", "-7/3", "123456789012345678901234567891/7"})
    EXPECT_EQ(to_exact_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Rational, DecimalHasThirtySignificantDigits) {
  EXPECT_EQ(to_decimal(make_rational(1, 3)), "0.333333333333333333333333333333");
  EXPECT_EQ(to_decimal(make_rational(137, 60)), "2.28333333333333333333333333333");
}

TEST(Rational, RatioToDoubleSurvivesHugeOperands) {
  Integer big = factorial(3000);
  EXPECT_DOUBLE_EQ(ratio_to_double(big * 3, big * 2), 1.5);
  EXPECT_DOUBLE_EQ(ratio_to_double(Integer(1), Integer(4)), 0.25);
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  FactorialCache cache;
  EXPECT_EQ(cache(20), factorial(20));
  EXPECT_EQ(cache(5), 120);
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  Polynomial p{1, 2, 3};  // 1 + 2x + 3x^2
  Polynomial q{0, 1};
  EXPECT_EQ((p * q).degree(), 3);
  EXPECT_EQ(p(Rational(2)), 17);
  EXPECT_EQ(p.derivative(), (Polynomial{2, 6}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.compose_affine(1, 1), (Polynomial{6, 8, 3}));  // p(x+1)
}

TEST(Polynomial, PrimitivePartHasIntegerCoefficientsAndPositiveLead) {
  Polynomial p{make_rational(-11, 6), make_rational(-1), make_rational(-1, 6)};
  auto [content, prim] = p.primitive_part();
  EXPECT_EQ(prim, (Polynomial{11, 6, 1}));
  EXPECT_EQ(content, make_rational(-1, 6));
}

TEST(Polynomial, DeflateIsExact) {
  Polynomial p = Polynomial{-1, 1} * Polynomial{2, 1};
  EXPECT_EQ(p.deflate(1), (Polynomial{2, 1}));
  EXPECT_THROW(p.deflate(3), std::exception);
}

TEST(Polynomial, ToString) { EXPECT_EQ((Polynomial{11, 6, 1}).to_string(), "s^2 + 6*s + 11"); }

TEST(BigFloat, ConstantsAndRounding) {
  BigFloat pi = BigFloat::pi(256);
  EXPECT_NEAR(pi.to_double(), std::numbers::pi, 1e-15);
  BigFloat third_down(make_rational(1, 3), 64, MPFR_RNDD), third_up(make_rational(1, 3), 64, MPFR_RNDU);
  EXPECT_LT(third_down.to_rational(), make_rational(1, 3));
  EXPECT_GT(third_up.to_rational(), make_rational(1, 3));
  EXPECT_EQ(BigFloat::pow2(-10, 64).to_rational(), make_rational(1, 1024));
}

TEST(ComplexValue, ArithmeticMatchesExactComplex) {
  ExactComplex a(make_rational(1, 3), make_rational(-2, 7)), b(make_rational(5, 2), make_rational(3, 11));
  ExactComplex q = a / b * a - b;
  ComplexValue fa(a.re, a.im, 256), fb(b.re, b.im, 256);
  ComplexValue fq = fa / fb * fa - fb;
  EXPECT_GE(agreement_bits(fq, ComplexValue(q.re, q.im, 256)), 245);
}

TEST(ComplexValue, ExpOfImaginaryPi) {
  ComplexValue z(BigFloat(0L, 200), BigFloat::pi(200));
  ComplexValue e = exp(z);
  EXPECT_NEAR(e.real().to_double(), -1.0, 1e-50);
  EXPECT_NEAR(e.imag().to_double(), 0.0, 1e-50);
}

TEST(ComplexValue, AgreementBits) {
  ComplexValue a(1.0, 0.0, 128), b(1.0 + std::ldexp(1.0, -40), 0.0, 128);
  EXPECT_NEAR(agreement_bits(a, b), 40, 1);
  EXPECT_EQ(agreement_bits(a, a), 128);
}
