#include <zetacf/coeff.hpp>
#include <zetacf/experiments.hpp>
#include <zetacf/sinh_series.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zetacf;

namespace {

// Independent oracles. None of these share code paths with the library
// routines they check.

/// a_{m,j} from the expanded product (1 - t)(1 - t/2)...(1 - t/m).
std::vector<Rational> a_by_product(unsigned m) {
  Polynomial p = 1;
  for (unsigned k = 1; k <= m; ++k) p *= Polynomial{Rational(1), make_rational(-1, k)};
  std::vector<Rational> out;
  for (unsigned j = 0; j <= m; ++j) out.push_back(j % 2 == 0 ? p.coeff(j) : Rational(-p.coeff(j)));
  return out;
}

/// B_n = n! [t^n] t/(e^t - 1), via the series (e^t - 1)/t = sum t^n/(n+1)!.
std::vector<Rational> bernoulli_by_series(unsigned n_max) {
  RationalSeries s(n_max);
  for (unsigned n = 0; n <= n_max; ++n) s[n] = make_rational(Integer(1), factorial(n + 1));
  RationalSeries inv = s.inverse();
  std::vector<Rational> out;
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(inv[n] * Rational(factorial(n)));
  return out;
}

Rational harmonic_by_sum(unsigned m) {
  Rational h = 0;
  for (unsigned r = 1; r <= m; ++r) h += make_rational(1, r);
  return h;
}

/// The closed formula for c_{m,k}, term by term in plain rationals.
std::vector<Rational> c_by_formula(unsigned m) {
  const auto a = a_by_product(m);
  const auto b = bernoulli_by_series(m);
  std::vector<Rational> c(m / 2 + 2);
  c[0] = 1;
  for (unsigned k = 1; k < c.size(); ++k) {
    Rational acc = 0;
    for (unsigned j = 0; 2 * j <= m; ++j)
      acc += a[2 * j] * Rational(1 - 2 * static_cast<long>(j)) * b[2 * j] * Rational(binomial(j, k - 1));
    c[k] = acc * (m + 1) * (k % 2 == 1 ? 1 : -1);
  }
  return c;
}

}  // namespace

TEST(CoeffTable, SmallRows) {
  EXPECT_EQ(coeff_table(0).a, std::vector<Rational>{1});
  EXPECT_EQ(coeff_table(3).a,
            (std::vector<Rational>{1, make_rational(11, 6), 1, make_rational(1, 6)}));
  EXPECT_EQ(coeff_table(5).a[1], make_rational(137, 60));
  EXPECT_EQ(coeff_table(2).a, (std::vector<Rational>{1, make_rational(3, 2), make_rational(1, 2)}));
}

TEST(CoeffTable, MatchesExpandedProduct) {
  for (unsigned m : {1U, 4U, 9U, 17U, 40U}) EXPECT_EQ(coeff_table(m).a, a_by_product(m)) << "m=" << m;
}

TEST(CoeffTable, InvariantsThroughTwoHundred) {
  const CheckResult r = check_coeff_tables(200);
  EXPECT_TRUE(r.pass) << (r.witness ? r.witness->relation : "");
}

TEST(CoeffTable, RootsOfP) {
  const CoeffTable t = coeff_table(12);
  for (long k = 1; k <= 12; ++k) EXPECT_EQ(eval_p(t, k), 0);
  EXPECT_NE(eval_p(t, 13), 0);
  EXPECT_EQ(eval_p(t, 0), 1);
}

TEST(CoeffTable, GrowthSanityBand) {
  for (double r : growth_ratios(1000, 3)) {
    EXPECT_GE(r, 1.0 / 3.0);
    EXPECT_LE(r, 3.0);
  }
}

TEST(Bernoulli, KnownValues) {
  const BernoulliTable b = bernoulli_table(12);
  EXPECT_EQ(b.b[0], 1);
  EXPECT_EQ(b.b[1], make_rational(-1, 2));
  EXPECT_EQ(b.b[2], make_rational(1, 6));
  EXPECT_EQ(b.b[3], 0);
  EXPECT_EQ(b.b[4], make_rational(-1, 30));
  EXPECT_EQ(b.b[12], make_rational(-691, 2730));
}

TEST(Bernoulli, ThreeRoutesAgreeThroughTwoHundred) {
  const BernoulliTable b = bernoulli_table(200);  // throws if its two internal routes disagree
  EXPECT_EQ(b.b, bernoulli_by_series(200));
  EXPECT_EQ(bernoulli_by_recurrence(200), bernoulli_akiyama_tanigawa(200));
}

TEST(Bernoulli, Recurrence) {
  const BernoulliTable b = bernoulli_table(60);
  for (unsigned n = 1; n <= 59; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * b.b[k];
    EXPECT_EQ(acc, 0) << "n=" << n;
  }
  for (unsigned j = 1; 2 * j + 1 <= 60; ++j) EXPECT_EQ(b.b[2 * j + 1], 0);
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(0).h, 0);
  EXPECT_EQ(harmonic(3).h, make_rational(11, 6));
  EXPECT_EQ(harmonic(10).h, make_rational(7381, 2520));
  for (unsigned m = 0; m <= 50; m += 7) EXPECT_EQ(harmonic(m).h, harmonic_by_sum(m));
}

TEST(CSequence, SmallCases) {
  EXPECT_EQ(c_direct(1).c, (std::vector<Rational>{1, 2}));
  EXPECT_EQ(c_direct(2).c[1], make_rational(11, 4));
  EXPECT_EQ(c_direct(2).c[1], make_rational(2 * 3, 4) * harmonic(3).h);
  for (unsigned m = 1; m <= 30; ++m) {
    EXPECT_EQ(c_direct(m).c[0], 1);
    EXPECT_EQ(c_direct(m).c.size(), m / 2 + 2U);
  }
}

TEST(CSequence, DirectMatchesPlainFormula) {
  for (unsigned m : {1U, 2U, 3U, 6U, 11U, 24U}) EXPECT_EQ(c_direct(m).c, c_by_formula(m)) << "m=" << m;
}

TEST(CSequence, ResidueOracle) {
  EXPECT_EQ(c_residue_oracle(1).c, (std::vector<Rational>{1, 2}));
  EXPECT_EQ(c_residue_oracle(6).c, c_direct(6).c);
  EXPECT_EQ(c_residue_oracle(2).c.size(), 3U);
  const CheckResult r = check_residue_oracle(60);
  EXPECT_TRUE(r.pass);
}

TEST(CSequence, GeneratingFunctionOracle) {
  const GenfuncTable g = c_genfunc_oracle(8, 5);
  EXPECT_EQ(g.rows[0], Polynomial(1));
  EXPECT_EQ(g.coefficient(1, 1), 1);
  const CSequence c3 = c_direct(3);
  for (unsigned k = 1; k < c3.c.size(); ++k) EXPECT_EQ(g.coefficient(3, k), c3.c[k] / 4);
  EXPECT_TRUE(check_genfunc(30).pass);
}

TEST(CSequence, GeneratingFunctionRejectsShortOrder) {
  EXPECT_THROW(c_genfunc_oracle(10, 4, 11), InsufficientOrder);
  EXPECT_NO_THROW(c_genfunc_oracle(10, 4, 12));
}

TEST(CSequence, Positivity) { EXPECT_TRUE(check_c_positivity(200).pass); }

TEST(CSequence, FirstCoefficientIdentity) {
  const BernoulliTable bern = bernoulli_table(40);
  for (unsigned m = 1; m <= 40; ++m) EXPECT_EQ(c_first(scaled_coeff_row(m), bern), c_direct(m).c[1]);
  EXPECT_TRUE(check_c1_identity(500).pass);
}

TEST(SinhSeries, ValueAtZEqualsOneOverTruncatedSum) {
  // d[0] = 2 / S(r^2) with S(w) = sum_{n>=1} w^{n-1}/(2n)!, summed independently.
  const SinhSeries s = sinh_series(1, 10);
  Rational sum = 0;
  for (std::size_t n = 1; n <= s.denominator_terms; ++n) sum += make_rational(Integer(1), factorial(2 * n));
  EXPECT_EQ(s.d[0], 2 / sum);
  EXPECT_NEAR(s.d[0].get_d(), 2.0 / (std::cosh(1.0) - 1.0), 1e-14);
}

TEST(SinhSeries, DerivativeAtZeroMatchesClosedForm) {
  // f(z) = r^2 (1-z)/sinh^2(r sqrt(1-z)/2); df/dz at z=0 for r = 2 in doubles.
  const SinhSeries s = sinh_series(4, 6);
  auto f = [](double z) {
    const double u = 1 - z;
    const double sh = std::sinh(std::sqrt(4 * u) / 2);
    return 4 * u / (sh * sh);
  };
  const double h = 1e-5;
  EXPECT_NEAR(s.d[1].get_d(), (f(h) - f(-h)) / (2 * h), 1e-8);
}

TEST(SinhSeries, SmallRadiusLimit) {
  const SinhSeries s = sinh_series(make_rational(1, 1000000), 5);
  EXPECT_NEAR(s.d[0].get_d(), 4.0, 1e-6);
  for (std::size_t k = 1; k < s.d.size(); ++k) EXPECT_LT(s.d[k].get_d(), 1e-6);
}

TEST(SinhSeries, PositiveAndLogConcave) {
  for (const auto& r2 : default_sinh_radii()) {
    const CheckResult r = check_sinh_logconcave(sinh_series(r2, 60));
    EXPECT_TRUE(r.pass) << "r^2=" << r2;
  }
}

TEST(SinhSeries, RejectsBadArguments) {
  EXPECT_THROW(sinh_series(0, 5), std::invalid_argument);
  EXPECT_THROW(sinh_series(1, 0), std::invalid_argument);
}

TEST(Properties, LogConcavityOfRandomRows) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 20; ++i) {
    const unsigned m = 2 + static_cast<unsigned>(gen() % 150);
    const ScaledCoeffRow row = scaled_coeff_row(m);
    EXPECT_TRUE(check_coeff_row(row).pass) << m;
    EXPECT_TRUE(check_newton_row(row).pass) << m;
  }
}
