#ifndef ZETACF_WORPITZKY_HPP
#define ZETACF_WORPITZKY_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/coeff.hpp>
#include <zetacf/parallel.hpp>
#include <zetacf/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace zetacf {

// With a_k = a_{m-1,k} and v_k = (k+1) a_k / ((k+s) a_{k-1}), the Worpitzky
// condition for the G-form continued fraction is
//   |(v_k + 1)(1 + 1/v_{k+1})| >= 4,   1 <= k <= m-2.
// Writing X_k = (k+1) a_k / a_{k-1} = P_k / Q_k (integers, from the scaled row),
//   |(v_k+1)(1+1/v_{k+1})|^2 = |X_k + k + s|^2 |X_{k+1} + k+1 + s|^2 / (|k+s|^2 X_{k+1}^2),
// which is rational whenever s is; all exact comparisons below clear
// denominators and compare integers.

struct RegionGrid {
  Rational sigma_min;
  Rational sigma_max;
  Rational t_min;
  Rational t_max;
  unsigned n_sigma = 1;
  unsigned n_t = 1;

  /// i-th sample on [lo, hi] with n samples (n == 1 gives lo).
  static Rational sample(const Rational& lo, const Rational& hi, unsigned n, unsigned i) {
    if (n <= 1) return lo;
    return lo + (hi - lo) * Rational(i) / Rational(n - 1);
  }
  Rational sigma(unsigned i) const { return sample(sigma_min, sigma_max, n_sigma, i); }
  Rational t(unsigned j) const { return sample(t_min, t_max, n_t, j); }

  void validate_strip() const {
    if (n_sigma < 1 || n_t < 1) throw std::invalid_argument("RegionGrid: need at least one sample per axis");
    if (!(sigma_min > 0 && sigma_min <= sigma_max && sigma_max < 1))
      throw std::invalid_argument("RegionGrid: sigma range must satisfy 0 < sigma_min <= sigma_max < 1");
    if (t_min > t_max) throw std::invalid_argument("RegionGrid: t_min > t_max");
  }
};

/// Rational lower enclosure of (1/2) sqrt(log m), on a 2^-32 lattice.
inline Rational prop1_t_bound(unsigned m) {
  if (m < 2) return 0;
  BigFloat x(static_cast<long>(m), 256);
  mpfr_log(x.get(), x.get(), MPFR_RNDD);
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDD);
  mpfr_mul_2si(x.get(), x.get(), 31, MPFR_RNDD);  // * 2^32 / 2
  Integer scaled;
  mpfr_get_z(scaled.get_mpz_t(), x.get(), MPFR_RNDD);
  return make_rational(scaled, Integer(1) << 32);
}

/// Whether |t| < (1/2) sqrt(log m), decided with directed rounding.
inline bool inside_prop1_band(unsigned m, const Rational& t) {
  if (m < 2) return false;
  const Rational q = 4 * t * t;  // compare 4 t^2 with log m
  BigFloat lo(static_cast<long>(m), 256), hi(static_cast<long>(m), 256);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  if (q < lo.to_rational()) return true;
  if (q >= hi.to_rational()) return false;
  throw std::runtime_error("inside_prop1_band: undecidable at 256 bits");
}

/// Default strip grid: sigma = i/(n+1), t spread over +-prop1_t_bound(m).
inline RegionGrid default_grid(unsigned m, unsigned n = 41) {
  const Rational T = prop1_t_bound(m);
  return {make_rational(1, n + 1), make_rational(n, n + 1), -T, T, n, n};
}

/// Integer data shared by every evaluation point for a fixed m.
class WorpitzkyContext {
 public:
  explicit WorpitzkyContext(unsigned m) : m_(m) {
    if (m < 3) throw std::invalid_argument("Worpitzky condition needs m >= 3 (1 <= k <= m-2)");
    const ScaledCoeffRow row = scaled_coeff_row(m - 1);
    p_.resize(m);
    q_.resize(m);
    for (unsigned k = 1; k <= m - 1; ++k) {
      p_[k] = row.scaled[k] * (k + 1);
      q_[k] = row.scaled[k - 1];
    }
    rhs_base_.resize(m - 1);
    for (unsigned k = 1; k <= m - 2; ++k) {
      Integer qp = q_[k] * p_[k + 1];
      rhs_base_[k] = qp * qp;
    }
  }

  unsigned m() const { return m_; }
  unsigned k_min() const { return 1; }
  unsigned k_max() const { return m_ - 2; }
  /// X_k = (k+1) a_k / a_{k-1} as numerator/denominator.
  const Integer& x_num(unsigned k) const { return p_.at(k); }
  const Integer& x_den(unsigned k) const { return q_.at(k); }
  const Integer& rhs_base(unsigned k) const { return rhs_base_.at(k); }

 private:
  unsigned m_;
  std::vector<Integer> p_, q_, rhs_base_;
};

struct PointMargin {
  Rational sigma;
  Rational t;
  unsigned argmin_k = 0;
  Rational margin_sq;  ///< min_k |(v_k+1)(1+1/v_{k+1})|^2 - 16
  bool pass = false;   ///< every k in range satisfies the condition
  unsigned failing_k = 0;  ///< first failing k when !pass
};

/// Exact Worpitzky check at s = sigma + i t for all k in [k_lo, k_hi].
inline PointMargin worpitzky_margin_exact(const WorpitzkyContext& ctx, const Rational& sigma, const Rational& t,
                                          unsigned k_lo, unsigned k_hi) {
  if (k_lo < ctx.k_min() || k_hi > ctx.k_max() || k_lo > k_hi)
    throw std::invalid_argument("worpitzky_margin_exact: k range outside 1..m-2");
  if (sigma <= -1) throw std::invalid_argument("worpitzky_margin_exact: requires Re s > -1");
  const Integer L = lcm(sigma.get_den(), t.get_den());
  const Integer sn = sigma.get_num() * (L / sigma.get_den());
  const Integer tn = t.get_num() * (L / t.get_den());
  const Integer tn2 = tn * tn;
  const Integer L2 = L * L;

  // A_k = (P_k L + Q_k (k L + sn))^2 + Q_k^2 tn^2 for k in [k_lo, k_hi + 1]
  std::vector<Integer> A(k_hi + 2);
  for (unsigned k = k_lo; k <= k_hi + 1; ++k) {
    Integer lin = ctx.x_num(k) * L + ctx.x_den(k) * (L * k + sn);
    Integer qt = ctx.x_den(k) * tn;
    A[k] = lin * lin + qt * qt;
  }

  PointMargin out{sigma, t, 0, 0, true, 0};
  std::vector<std::pair<Integer, Integer>> ratio(k_hi + 1);  // (lhs, den) with rho = lhs/den
  std::vector<double> approx(k_hi + 1);
  double best = 0;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    Integer kl = L * k + sn;
    Integer e = kl * kl + tn2;
    Integer den = ctx.rhs_base(k) * (L2 * e);
    Integer lhs = A[k] * A[k + 1];
    if (out.pass && lhs < 16 * den) {
      out.pass = false;
      out.failing_k = k;
    }
    approx[k] = ratio_to_double(lhs, den);
    if (k == k_lo || approx[k] < best) best = approx[k];
    ratio[k] = {std::move(lhs), std::move(den)};
  }

  // The double ratios are within a few ulps of the exact values; resolve the
  // minimum exactly among all near-ties.
  std::optional<unsigned> arg;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    if (approx[k] > best * (1 + 1e-9)) continue;
    if (!arg || ratio[k].first * ratio[*arg].second < ratio[*arg].first * ratio[k].second) arg = k;
  }
  out.argmin_k = *arg;
  out.margin_sq = make_rational(ratio[*arg].first, ratio[*arg].second) - 16;
  return out;
}

inline PointMargin worpitzky_margin_exact(const WorpitzkyContext& ctx, const Rational& sigma, const Rational& t) {
  return worpitzky_margin_exact(ctx, sigma, t, ctx.k_min(), ctx.k_max());
}

/// Floating evaluation at a complex point with an attached error bound.
struct MarginEstimate {
  BigFloat margin;       ///< min_k |(v_k+1)(1+1/v_{k+1})| - 4
  BigFloat error_bound;  ///< |computed - exact| <= error_bound
  unsigned argmin_k = 0;
  bool pole_adjacent = false;

  /// +1 certified >= 0, -1 certified < 0, 0 undecided at this precision.
  int certified_sign() const {
    if (margin - error_bound >= BigFloat(0L, margin.precision())) return 1;
    if (margin + error_bound < BigFloat(0L, margin.precision())) return -1;
    return 0;
  }
};

/// Every quantity entering |.|^2 is a sum of nonnegative terms when
/// Re s > -1, so each rounding contributes a relative error of at most 2^-P
/// and the total relative error of the modulus stays below 64 * 2^-P.
inline MarginEstimate worpitzky_margin(const WorpitzkyContext& ctx, const ComplexValue& s, unsigned k_lo,
                                       unsigned k_hi) {
  if (k_lo < ctx.k_min() || k_hi > ctx.k_max() || k_lo > k_hi)
    throw std::invalid_argument("worpitzky_margin: k range outside 1..m-2");
  const mpfr_prec_t prec = s.precision();
  const BigFloat& sigma = s.real();
  const BigFloat& t = s.imag();
  if (sigma <= BigFloat(-1L, prec)) throw std::invalid_argument("worpitzky_margin: requires Re s > -1");
  const BigFloat t2 = t * t;
  const BigFloat pole_threshold = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);

  auto x_of = [&](unsigned k) { return BigFloat(ctx.x_num(k), prec) / BigFloat(ctx.x_den(k), prec); };
  auto shifted_norm = [&](const BigFloat& x, unsigned k) {  // |x + k + s|^2
    BigFloat re = x + BigFloat(static_cast<long>(k), prec) + sigma;
    return re * re + t2;
  };

  MarginEstimate out{BigFloat(prec), BigFloat(prec), 0, false};
  std::optional<BigFloat> best;
  BigFloat x_next = x_of(k_lo);
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    BigFloat x = x_next;
    x_next = x_of(k + 1);
    BigFloat ks = shifted_norm(BigFloat(0L, prec), k);  // |k+s|^2
    if (sqrt(ks) < pole_threshold) out.pole_adjacent = true;
    BigFloat rho = shifted_norm(x, k) * shifted_norm(x_next, k + 1) / (ks * x_next * x_next);
    BigFloat mod = sqrt(rho);
    if (!best || mod < *best) {
      best = mod;
      out.argmin_k = k;
    }
  }
  out.margin = *best - BigFloat(4L, prec);
  out.error_bound = *best * BigFloat::pow2(6 - static_cast<long>(prec), prec);
  return out;
}

inline MarginEstimate worpitzky_margin(unsigned m, const ComplexValue& s) {
  WorpitzkyContext ctx(m);
  return worpitzky_margin(ctx, s, ctx.k_min(), ctx.k_max());
}

struct WorpitzkyReport {
  unsigned m = 0;
  RegionGrid grid;
  Rational t_band;                    ///< prop1_t_bound(m), recorded
  std::vector<PointMargin> points;    ///< sorted by (sigma, t)
  Rational global_min_margin_sq;
  std::vector<std::size_t> failing;   ///< indices into points
  bool band_pass = true;              ///< all points with |t| < band pass
  Rational empirical_t_bound;         ///< at sigma = 1/2, by bisection
  Rational empirical_resolution;
};

/// Largest T (to the stated resolution) such that the condition holds on a
/// 1/8-spaced march over [0, T] at s = 1/2 + i t, refined by bisection
/// between the last passing and first failing sample. The failing set is not
/// an interval, so a coarser doubling search can skip past the first failure.
inline std::pair<Rational, Rational> empirical_t_bound(const WorpitzkyContext& ctx, unsigned iterations = 20) {
  const Rational half = make_rational(1, 2);
  const Rational step = make_rational(1, 8);
  const Rational cap = 64;
  auto ok = [&](const Rational& t) { return worpitzky_margin_exact(ctx, half, t).pass; };
  Rational lo = 0;
  if (!ok(lo)) return {Rational(0), Rational(0)};
  while (ok(lo + step)) {
    lo += step;
    if (lo >= cap) return {lo, Rational(0)};
  }
  Rational hi = lo + step;
  for (unsigned i = 0; i < iterations; ++i) {
    Rational mid = (lo + hi) / 2;
    if (ok(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi - lo};
}

inline WorpitzkyReport prop1_scan(unsigned m, const RegionGrid& grid, unsigned jobs = 1) {
  grid.validate_strip();
  const WorpitzkyContext ctx(m);
  WorpitzkyReport rep;
  rep.m = m;
  rep.grid = grid;
  rep.t_band = prop1_t_bound(m);

  const std::size_t n = static_cast<std::size_t>(grid.n_sigma) * grid.n_t;
  rep.points.resize(n);
  parallel_for(n, jobs, [&](std::size_t idx) {
    const unsigned i = static_cast<unsigned>(idx / grid.n_t);
    const unsigned j = static_cast<unsigned>(idx % grid.n_t);
    rep.points[idx] = worpitzky_margin_exact(ctx, grid.sigma(i), grid.t(j));
  });
  std::sort(rep.points.begin(), rep.points.end(), [](const PointMargin& a, const PointMargin& b) {
    return std::tie(a.sigma, a.t) < std::tie(b.sigma, b.t);
  });

  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const auto& p = rep.points[i];
    if (i == 0 || p.margin_sq < rep.global_min_margin_sq) rep.global_min_margin_sq = p.margin_sq;
    if (!p.pass) {
      rep.failing.push_back(i);
      if (inside_prop1_band(m, p.t)) rep.band_pass = false;
    }
  }
  std::tie(rep.empirical_t_bound, rep.empirical_resolution) = empirical_t_bound(ctx);
  return rep;
}

}  // namespace zetacf

#endif  // ZETACF_WORPITZKY_HPP
