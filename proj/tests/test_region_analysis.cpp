#include <zetacf/continued_fraction.hpp>
#include <zetacf/experiments.hpp>
#include <zetacf/serialize.hpp>
#include <zetacf/worpitzky.hpp>
#include <zetacf/zero_scan.hpp>
#include <zetacf/zeta_reference.hpp>

#include <gtest/gtest.h>

#include <complex>
#include <fstream>
#include <numbers>

using namespace zetacf;

namespace {

using cd = std::complex<double>;

/// min over levels k >= 2 of 1/|alpha_k|, alpha_k = a_k / (b_{k-1} b_k), read
/// straight off the G-form continued fraction in doubles. Returns the minimum
/// and the (1-based) level where it occurs.
std::pair<double, std::size_t> worpitzky_by_levels(unsigned m, cd s) {
  const ContinuedFraction cf = euler_cf(g_expansion(m));
  auto eval = [&](const Linear& l) { return cd(l.c0.get_d(), 0) + l.c1.get_d() * s; };
  double best = 1e300;
  std::size_t at = 0;
  for (std::size_t k = 2; k <= cf.levels.size(); ++k) {
    const cd alpha =
        eval(cf.levels[k - 1].numerator) / (eval(cf.levels[k - 2].denominator) * eval(cf.levels[k - 1].denominator));
    if (1 / std::abs(alpha) < best) {
      best = 1 / std::abs(alpha);
      at = k;
    }
  }
  return {best, at};
}

double modulus(const PointMargin& p) { return std::sqrt(p.margin_sq.get_d() + 16); }

}  // namespace

TEST(Worpitzky, ExactMarginMatchesContinuedFractionLevels) {
  for (unsigned m : {5U, 10U, 30U}) {
    const WorpitzkyContext ctx(m);
    for (const auto& [sig, t] : {std::pair{make_rational(1, 2), make_rational(1, 3)},
                                 std::pair{make_rational(1, 5), make_rational(-7, 4)},
                                 std::pair{make_rational(9, 10), Rational(0)}}) {
      const PointMargin p = worpitzky_margin_exact(ctx, sig, t);
      const auto [ref, level] = worpitzky_by_levels(m, cd(sig.get_d(), t.get_d()));
      EXPECT_NEAR(modulus(p), ref, 1e-9 * ref) << "m=" << m;
      EXPECT_EQ(p.argmin_k + 1, level);
      EXPECT_EQ(p.pass, ref >= 4);
    }
  }
}

TEST(Worpitzky, RealPointsPass) {
  for (unsigned m : {3U, 10U, 100U}) {
    const WorpitzkyContext ctx(m);
    for (int i = 1; i < 10; ++i) EXPECT_TRUE(worpitzky_margin_exact(ctx, make_rational(i, 10), 0).pass) << m;
  }
}

TEST(Worpitzky, BandScanAtOneHundred) {
  const WorpitzkyReport r = prop1_scan(100, default_grid(100, 11), 2);
  EXPECT_EQ(r.points.size(), 121U);
  EXPECT_TRUE(r.failing.empty());
  EXPECT_TRUE(r.band_pass);
  EXPECT_GE(r.global_min_margin_sq, 0);
  EXPECT_GE(r.empirical_t_bound, r.t_band);
  for (std::size_t i = 1; i < r.points.size(); ++i)
    EXPECT_TRUE(std::tie(r.points[i - 1].sigma, r.points[i - 1].t) < std::tie(r.points[i].sigma, r.points[i].t));
}

TEST(Worpitzky, FarOutsideBandFailsAndIsReported) {
  const WorpitzkyContext ctx(10);
  const PointMargin p = worpitzky_margin_exact(ctx, make_rational(1, 2), 6);
  EXPECT_FALSE(p.pass);
  EXPECT_GE(p.failing_k, 1U);
  EXPECT_LT(p.margin_sq, 0);

  RegionGrid g{make_rational(1, 2), make_rational(1, 2), 6, 6, 1, 1};
  const WorpitzkyReport r = prop1_scan(10, g);
  ASSERT_EQ(r.failing.size(), 1U);
  EXPECT_TRUE(r.band_pass);  // the failing point is outside the band
}

TEST(Worpitzky, SinglePointGrid) {
  RegionGrid g{make_rational(1, 2), make_rational(1, 2), 0, 0, 1, 1};
  const WorpitzkyReport r = prop1_scan(20, g);
  ASSERT_EQ(r.points.size(), 1U);
  EXPECT_EQ(r.points[0].sigma, make_rational(1, 2));
  EXPECT_EQ(r.points[0].t, 0);
}

TEST(Worpitzky, GridValidation) {
  EXPECT_THROW(prop1_scan(10, RegionGrid{0, make_rational(1, 2), 0, 1, 3, 3}), std::invalid_argument);
  EXPECT_THROW(prop1_scan(10, RegionGrid{make_rational(1, 2), 1, 0, 1, 3, 3}), std::invalid_argument);
  EXPECT_THROW(WorpitzkyContext(2), std::invalid_argument);
}

TEST(Worpitzky, FloatingEstimateAgreesWithExact) {
  const WorpitzkyContext ctx(60);
  for (const auto& [sig, t] : {std::pair{make_rational(1, 3), make_rational(1, 2)},
                               std::pair{make_rational(3, 4), make_rational(-2, 1)}}) {
    const PointMargin exact = worpitzky_margin_exact(ctx, sig, t);
    const MarginEstimate est = worpitzky_margin(ctx, ComplexValue(sig, t, 256), ctx.k_min(), ctx.k_max());
    EXPECT_NEAR(est.margin.to_double(), modulus(exact) - 4, 1e-12);
    EXPECT_EQ(est.argmin_k, exact.argmin_k);
    EXPECT_EQ(est.certified_sign(), exact.pass ? 1 : -1);
  }
}

TEST(Worpitzky, BandBoundIsLowerEnclosure) {
  for (unsigned m : {10U, 100U, 1000U}) {
    const double T = 0.5 * std::sqrt(std::log(static_cast<double>(m)));
    const Rational b = prop1_t_bound(m);
    EXPECT_LE(b.get_d(), T);
    EXPECT_GT(b.get_d(), T - 1e-9);
    EXPECT_TRUE(inside_prop1_band(m, b));
  }
}

TEST(Worpitzky, EmpiricalBoundAtHalf) {
  // First failures at sigma = 1/2 sit near t = 4.05, 3.45, 3.50, 3.75, 3.95 for
  // m = 10, 30, 100, 300, 1000: growth from m = 30 on, with m = 10 above the
  // trend (its continued fraction has only eight constrained levels).
  std::vector<Rational> bounds;
  for (unsigned m : {10U, 30U, 100U, 300U, 1000U}) {
    const WorpitzkyContext ctx(m);
    const auto [bound, resolution] = empirical_t_bound(ctx);
    EXPECT_GE(bound, prop1_t_bound(m)) << m;
    EXPECT_EQ(resolution, make_rational(1, 8 << 20));
    EXPECT_TRUE(worpitzky_margin_exact(ctx, make_rational(1, 2), bound).pass);
    EXPECT_FALSE(worpitzky_margin_exact(ctx, make_rational(1, 2), bound + resolution).pass);
    for (int i = 0; i <= 16; ++i)
      EXPECT_TRUE(worpitzky_margin_exact(ctx, make_rational(1, 2), bound * make_rational(i, 16)).pass) << m;
    bounds.push_back(bound);
  }
  EXPECT_GT(bounds[0], bounds[2]);
  for (std::size_t i = 2; i < bounds.size(); ++i) EXPECT_GT(bounds[i], bounds[i - 1]);
}

TEST(RatioBounds, FirstRatioEqualsHarmonicNumber) {
  const RatioBoundsReport r = ratio_bounds_check(5);
  EXPECT_EQ(r.h, make_rational(25, 12));
  EXPECT_EQ(r.j_max, 1U);
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(ratio_bounds_check(2).pass());
  EXPECT_TRUE(check_lemma1(2).pass);
  EXPECT_THROW(ratio_bounds_check(1), std::invalid_argument);
}

TEST(RatioBounds, OutOfRangeViolationIsDetected) {
  // near the end of the row a_j/a_{j-1} falls well below (h-1)/j
  const ScaledCoeffRow row = scaled_coeff_row(30);
  const Rational h = harmonic(30).h;
  Witness w;
  EXPECT_FALSE(ratio_bound_holds(row, h, 30, &w));
  EXPECT_EQ(w.relation, "(h-1)/j <= a_j/a_{j-1}");
}

TEST(ZeroScan, QuadraticsWithRootsOutside) {
  const Rectangle rect{0, 1, -2, 2};
  for (const Polynomial& p : {Polynomial{11, 6, 1}, Polynomial{11, 10, 3}}) {
    const ZeroScanResult z = zero_scan(p, rect);
    EXPECT_TRUE(z.certified);
    EXPECT_EQ(z.winding, 0);
    EXPECT_GT(z.boundary_min, 0);
  }
}

TEST(ZeroScan, ConstantAndInteriorRoots) {
  const Rectangle rect{0, 1, -1, 1};
  EXPECT_EQ(zero_scan(Polynomial(7), rect).winding, 0);
  const ZeroScanResult one = zero_scan(Polynomial{make_rational(-1, 2), 1}, rect);
  EXPECT_TRUE(one.certified);
  EXPECT_EQ(one.winding, 1);
  // roots 1/2 +- i/2
  const ZeroScanResult two = zero_scan(Polynomial{make_rational(1, 2), -1, 1}, rect);
  EXPECT_TRUE(two.certified);
  EXPECT_EQ(two.winding, 2);
}

TEST(ZeroScan, RootOnBoundaryIsUncertified) {
  const ZeroScanResult z = zero_scan(Polynomial{0, 1}, Rectangle{0, 1, -1, 1}, 256, 12);
  EXPECT_FALSE(z.certified);
  EXPECT_LT(z.witness.norm(), make_rational(1, 1000));
}

TEST(ZeroScan, NumeratorsOfSmallM) {
  for (unsigned m : {3U, 10U}) {
    const Rational t = prop1_t_bound(m) + make_rational(1, 1 << 20);
    for (const auto& pf : {build_g(m), build_f(m)}) {
      const ZeroScanResult z = zero_scan(numerator_poly(pf), {0, 1, -t, t});
      EXPECT_TRUE(z.certified);
      EXPECT_EQ(z.winding, 0);
    }
  }
}

TEST(Monotonicity, FindsFirstIncrease) {
  const CSequence c{5, {1, 2, 1, 1}};
  const MonotonicityFinding plain = monotonicity_of(c, false);
  ASSERT_TRUE(plain.violation);
  EXPECT_EQ(*plain.violation, 3U);
  EXPECT_EQ(plain.previous, make_rational(1, 2));
  EXPECT_EQ(plain.current, 1);
  // weighted ratios 2, 1, 3
  EXPECT_EQ(*monotonicity_of(c, true).violation, 3U);
  EXPECT_FALSE(monotonicity_of(CSequence{5, {1, 4, 2, 1}}, false).violation);
}

TEST(Monotonicity, SmallSearch) {
  const MonotonicityReport r = c_monotonicity_search(2, 40);
  EXPECT_EQ(r.plain.size(), 39U);
  EXPECT_TRUE(r.plain_always_decreasing);
  EXPECT_FALSE(r.smallest_weighted_violation);
  EXPECT_THROW(c_monotonicity_search(1, 5), std::invalid_argument);
}

TEST(Monotonicity, GoldenFileIsConsistent) {
  std::ifstream f(std::string(ZETACF_GOLDEN_DIR) + "/monotonicity.json");
  ASSERT_TRUE(f);
  const Json golden = Json::parse(f);
  ASSERT_FALSE(golden["smallest_weighted_violation_m"].is_null());
  const unsigned m = golden["smallest_weighted_violation_m"].get<unsigned>();
  const unsigned k = golden["smallest_weighted_violation"]["first_violation_k"].get<unsigned>();
  const MonotonicityFinding at = monotonicity_of(c_direct(m), true);
  ASSERT_TRUE(at.violation);
  EXPECT_EQ(*at.violation, k);
  // same finding from the residue route
  EXPECT_EQ(monotonicity_of(c_residue_oracle(m), true).violation, at.violation);
  EXPECT_FALSE(monotonicity_of(c_direct(m - 1), true).violation);
}

TEST(YContinuedFraction, BinomialSpecializations) {
  const BinomialCfReport r = binomial_cf_check(10);
  EXPECT_TRUE(r.result.pass);
  // t = 1: (1-y) - 1 = -y; t = 2: ((1-y)^2 - 1)/2 = -y + y^2/2
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(r.cf[n](Rational(1)), n == 1 ? -1 : 0) << n;
    EXPECT_EQ(r.cf[n](Rational(2)), n == 1 ? Rational(-1) : n == 2 ? make_rational(1, 2) : Rational(0)) << n;
  }
  EXPECT_THROW(binomial_cf_check(3), std::invalid_argument);
}

TEST(YContinuedFraction, PositivityAndGeneratingFunction) {
  const PositivityReport r = positivity_truncation_check(16);
  EXPECT_TRUE(r.result.pass);
  EXPECT_TRUE(check_positivity_vs_genfunc(r).pass);
  EXPECT_EQ(r.levels, 9U);
}

TEST(ZetaReference, KnownValues) {
  const ComplexValue z2 = zeta_reference(ComplexValue(Rational(2), 128), 128);
  EXPECT_NEAR(z2.real().to_double(), std::numbers::pi * std::numbers::pi / 6, 1e-15);
  EXPECT_NEAR(z2.imag().to_double(), 0, 1e-30);
  const ComplexValue half = zeta_reference(ComplexValue(make_rational(1, 2), 128), 128);
  EXPECT_NEAR(half.real().to_double(), -1.4603545088095868, 1e-15);
  const ComplexValue rho(make_rational(1, 2), parse_rational("14134725141734693790/1000000000000000000"), 128);
  EXPECT_LT(zeta_reference(rho, 128).abs().to_double(), 1e-15);
}

TEST(Convergence, DecreasesAtTwo) {
  const auto rows = convergence_probe({ComplexValue(Rational(2), 128)}, {4, 8, 16}, 128);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_LT(rows[1].error, rows[0].error);
  EXPECT_LT(rows[2].error, rows[1].error);
  EXPECT_LT(rows[2].error.to_double(), 0.02);
  EXPECT_THROW(convergence_probe({ComplexValue(Rational(0), 64)}, {4}, 64), std::invalid_argument);
}
