#ifndef ZETACF_EXPERIMENTS_HPP
#define ZETACF_EXPERIMENTS_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/coeff.hpp>
#include <zetacf/continued_fraction.hpp>
#include <zetacf/parallel.hpp>
#include <zetacf/partial_fraction.hpp>
#include <zetacf/power_series.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>
#include <zetacf/sinh_series.hpp>
#include <zetacf/zeta_reference.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace zetacf {

/// First counterexample to an exact claim.
struct Witness {
  unsigned m = 0;
  unsigned k = 0;
  std::string relation;  ///< e.g. "lhs <= rhs"
  Rational lhs;
  Rational rhs;
};

struct CheckResult {
  std::string claim;
  bool pass = true;
  std::size_t checks = 0;
  std::optional<Witness> witness;

  CheckResult() = default;
  explicit CheckResult(std::string name) : claim(std::move(name)) {}

  void record(bool ok, Witness w) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      witness = std::move(w);
    }
  }
  void merge(const CheckResult& o) {
    checks += o.checks;
    if (!o.pass && pass) {
      pass = false;
      witness = o.witness;
    }
  }
};

// ---------------------------------------------------------------------------
// Coefficient table checks
// ---------------------------------------------------------------------------

/// a_{m,0} = 1, a_{m,1} = h_m, a_{m,m} = 1/m!, a > 0, p_m(k) = 0 for 1 <= k <= m,
/// and log-concavity a_j^2 >= a_{j-1} a_{j+1}.
inline CheckResult check_coeff_row(const ScaledCoeffRow& row) {
  CheckResult r{"a-table"};
  const unsigned m = row.m;
  const CoeffTable t = coeff_table(row);
  r.record(t.a[0] == 1, {m, 0, "a_0 == 1", t.a[0], Rational(1)});
  if (m >= 1) {
    const Rational h = harmonic(m).h;
    r.record(t.a[1] == h, {m, 1, "a_1 == h_m", t.a[1], h});
  }
  const Rational last = make_rational(Integer(1), factorial(m));
  r.record(t.a[m] == last, {m, m, "a_m == 1/m!", t.a[m], last});
  for (unsigned j = 0; j <= m; ++j) r.record(row.scaled[j] > 0, {m, j, "a_j > 0", t.a[j], Rational(0)});

  // p_m(k) m! = sum (-1)^j e_j k^j, Horner in integers
  for (unsigned k = 1; k <= m; ++k) {
    Integer acc = 0;
    for (std::size_t j = row.scaled.size(); j-- > 0;) {
      acc *= k;
      if (j % 2 == 0) {
        acc += row.scaled[j];
      } else {
        acc -= row.scaled[j];
      }
    }
    r.record(acc == 0, {m, k, "p_m(k) == 0", make_rational(acc, row.denominator), Rational(0)});
  }
  for (unsigned j = 1; j + 1 <= m; ++j) {
    const Integer lhs = row.scaled[j] * row.scaled[j];
    const Integer rhs = row.scaled[j - 1] * row.scaled[j + 1];
    r.record(lhs >= rhs, {m, j, "a_j^2 >= a_{j-1} a_{j+1}", make_rational(lhs, row.denominator * row.denominator),
                          make_rational(rhs, row.denominator * row.denominator)});
  }
  return r;
}

inline CheckResult check_coeff_tables(unsigned m_max) {
  CheckResult r{"a-table"};
  ScaledCoeffRow row;
  for (unsigned m = 0; m <= m_max; ++m) {
    if (m > 0) row = row.next();
    r.merge(check_coeff_row(row));
  }
  return r;
}

/// j a_j / a_{j-1} is non-increasing in j over the whole row.
inline CheckResult check_newton_row(const ScaledCoeffRow& row) {
  CheckResult r{"newton"};
  const auto& e = row.scaled;
  for (unsigned j = 1; j + 1 < e.size(); ++j) {
    // j e_j / e_{j-1} >= (j+1) e_{j+1} / e_j  <=>  j e_j^2 >= (j+1) e_{j+1} e_{j-1}
    const Integer lhs = e[j] * e[j] * j;
    const Integer rhs = e[j + 1] * e[j - 1] * (j + 1);
    r.record(lhs >= rhs, {row.m, j + 1, "(j) a_j/a_{j-1} >= (j+1) a_{j+1}/a_j",
                          make_rational(e[j] * j, e[j - 1]), make_rational(e[j + 1] * (j + 1), e[j])});
  }
  return r;
}

/// Ratio bounds for the row m-1 of the table:
///   (h_{m-1} - 1)/j <= a_{m-1,j}/a_{m-1,j-1} <= h_{m-1}/j  for 1 <= j <= h_{m-1}/2,
/// and j a_j/a_{j-1} non-increasing over the full row.
struct RatioBoundsReport {
  unsigned m = 0;
  Rational h;         ///< h_{m-1}
  unsigned j_max = 0;  ///< largest j with j <= h/2 (0 if none)
  CheckResult bounds{"lemma1"};
  CheckResult monotone{"newton"};
  bool pass() const { return bounds.pass && monotone.pass; }
};

/// Whether the ratio bound holds at a single j (callable for any j, not only j <= h/2).
inline bool ratio_bound_holds(const ScaledCoeffRow& row, const Rational& h, unsigned j, Witness* w = nullptr) {
  const Rational ratio = make_rational(row.scaled[j], row.scaled[j - 1]);
  const Rational lo = (h - 1) / j;
  const Rational hi = h / j;
  bool ok = lo <= ratio && ratio <= hi;
  if (!ok && w) *w = {row.m + 1, j, ratio < lo ? "(h-1)/j <= a_j/a_{j-1}" : "a_j/a_{j-1} <= h/j", ratio,
                      ratio < lo ? lo : hi};
  return ok;
}

inline RatioBoundsReport ratio_bounds_check(const ScaledCoeffRow& prev) {
  RatioBoundsReport rep;
  rep.m = prev.m + 1;
  rep.h = harmonic(prev.m).h;
  const unsigned m = rep.m;
  for (unsigned j = 1; j < prev.scaled.size() && Rational(2 * j) <= rep.h; ++j) {
    rep.j_max = j;
    Witness w;
    bool ok = ratio_bound_holds(prev, rep.h, j, &w);
    rep.bounds.record(ok, w);
  }
  rep.monotone = check_newton_row(prev);
  for (auto* c : {&rep.bounds, &rep.monotone})
    if (c->witness) c->witness->m = m;
  return rep;
}

inline RatioBoundsReport ratio_bounds_check(unsigned m) {
  if (m < 2) throw std::invalid_argument("ratio_bounds_check: m must be >= 2");
  return ratio_bounds_check(scaled_coeff_row(m - 1));
}

inline CheckResult check_lemma1(unsigned m_max) {
  CheckResult r{"lemma1"};
  ScaledCoeffRow row = scaled_coeff_row(1);
  for (unsigned m = 2; m <= m_max; ++m) {
    r.merge(ratio_bounds_check(row).bounds);
    row = row.next();
  }
  r.checks = std::max<std::size_t>(r.checks, m_max >= 2 ? 1 : 0);
  return r;
}

inline CheckResult check_newton(unsigned m_max) {
  CheckResult r{"newton"};
  ScaledCoeffRow row;
  for (unsigned m = 0; m <= m_max; ++m) {
    if (m > 0) row = row.next();
    r.merge(check_newton_row(row));
  }
  return r;
}

/// a_{m,j} / ((log m)^j / j!) for the growth sanity band.
inline std::vector<double> growth_ratios(unsigned m, unsigned j_max) {
  const CoeffTable t = coeff_table(m);
  const double lm = std::log(static_cast<double>(m));
  std::vector<double> out;
  double scale = 1;
  for (unsigned j = 1; j <= j_max; ++j) {
    scale *= lm / j;
    out.push_back(t.a[j].get_d() / scale);
  }
  return out;
}

// ---------------------------------------------------------------------------
// c-sequence checks
// ---------------------------------------------------------------------------

/// Runs fn(m, c_direct(m)) for m in [m_from, m_to], sharing one Bernoulli table.
template <class Fn>
void for_each_c(unsigned m_from, unsigned m_to, unsigned jobs, Fn&& fn) {
  if (m_to < m_from) return;
  const BernoulliTable bern = bernoulli_table(m_to);
  std::vector<ScaledCoeffRow> rows;
  rows.reserve(m_to - m_from + 1);
  ScaledCoeffRow row = scaled_coeff_row(m_from);
  for (unsigned m = m_from; m <= m_to; ++m) {
    if (m > m_from) row = row.next();
    rows.push_back(row);
  }
  parallel_for(rows.size(), jobs, [&](std::size_t i) { fn(rows[i].m, c_direct(rows[i], bern)); });
}

inline CheckResult check_c_positivity(unsigned m_max, unsigned jobs = 1) {
  std::vector<CheckResult> per(m_max + 1, CheckResult{"positivity"});
  for_each_c(1, m_max, jobs, [&](unsigned m, const CSequence& c) {
    for (unsigned k = 0; k < c.c.size(); ++k) per[m].record(c.c[k] > 0, {m, k, "c_{m,k} > 0", c.c[k], Rational(0)});
  });
  CheckResult r{"positivity"};
  for (const auto& p : per) r.merge(p);
  return r;
}

/// c_{m,1} = (m+1) sum_j a_{m,2j} (1-2j) B_{2j}, the k = 1 case of the direct
/// formula; cheap enough to sweep far past where full rows are affordable.
inline Rational c_first(const ScaledCoeffRow& row, const BernoulliTable& bern) {
  Rational acc = 0;
  for (unsigned j = 0; 2 * j <= row.m; ++j) acc += Rational(row.scaled[2 * j]) * (1 - 2 * static_cast<long>(j)) * bern.b[2 * j];
  return acc * (row.m + 1) / Rational(row.denominator);
}

inline CheckResult check_c1_identity(unsigned m_max) {
  CheckResult r{"c1-identity"};
  const BernoulliTable bern = bernoulli_table(std::max(m_max, 1U));
  ScaledCoeffRow row;
  for (unsigned m = 1; m <= m_max; ++m) {
    row = row.next();
    const Rational lhs = c_first(row, bern);
    const Rational rhs = make_rational(2 * (m + 1), m + 2) * harmonic(m + 1).h;
    r.record(lhs == rhs, {m, 1, "c_{m,1} == 2(m+1)/(m+2) h_{m+1}", lhs, rhs});
  }
  return r;
}

inline CheckResult check_residue_oracle(unsigned m_max, unsigned jobs = 1) {
  std::vector<CheckResult> per(m_max + 1, CheckResult{"oracle3"});
  const BernoulliTable bern = bernoulli_table(m_max);
  for_each_c(1, m_max, jobs, [&](unsigned m, const CSequence& c) {
    const CSequence o = c_residue_oracle(coeff_table(m), bern);
    for (unsigned k = 0; k < c.c.size(); ++k)
      per[m].record(c.c[k] == o.c[k], {m, k, "c_direct == c_residue", c.c[k], o.c[k]});
  });
  CheckResult r{"oracle3"};
  for (const auto& p : per) r.merge(p);
  return r;
}

/// Generating-function coefficients against c_direct/(m+1), including the
/// constant term and the vanishing of every z-power beyond the c-sequence.
inline CheckResult check_genfunc(unsigned m_max) {
  CheckResult r{"genfunc"};
  const GenfuncTable g = c_genfunc_oracle(m_max, m_max / 2 + 2);
  r.record(g.rows[0] == Polynomial(1), {0, 0, "[y^0] == 1", g.rows[0].constant_term(), Rational(1)});
  const BernoulliTable bern = bernoulli_table(std::max(m_max, 1U));
  ScaledCoeffRow row;
  for (unsigned m = 1; m <= m_max; ++m) {
    row = row.next();
    const CSequence c = c_direct(row, bern);
    for (unsigned k = 1; k < c.c.size(); ++k) {
      const Rational lhs = g.rows[m].coeff(k - 1);
      const Rational rhs = c.c[k] / (m + 1);
      r.record(lhs == rhs, {m, k, "[y^m z^{k-1}] == c_{m,k}/(m+1)", lhs, rhs});
    }
    const auto degree = static_cast<long>(c.c.size()) - 2;
    r.record(g.rows[m].degree() <= degree, {m, static_cast<unsigned>(g.rows[m].degree() + 1), "z-degree <= K-1",
                                            Rational(g.rows[m].degree()), Rational(degree)});
  }
  return r;
}

/// Strict-increase search on c_k/c_{k-1} and k c_k/c_{k-1}.
struct MonotonicityFinding {
  unsigned m = 0;
  bool weighted = false;  ///< false: c_k/c_{k-1}; true: k c_k/c_{k-1}
  std::optional<unsigned> violation;  ///< smallest k with r_k > r_{k-1}
  Rational previous;  ///< r_{k-1} at the violation
  Rational current;   ///< r_k at the violation
};

inline MonotonicityFinding monotonicity_of(const CSequence& c, bool weighted) {
  MonotonicityFinding f;
  f.m = c.m;
  f.weighted = weighted;
  auto ratio = [&](unsigned k) {
    Rational r = c.c[k] / c.c[k - 1];
    return weighted ? r * k : r;
  };
  for (unsigned k = 2; k < c.c.size(); ++k) {
    Rational prev = ratio(k - 1), cur = ratio(k);
    if (cur > prev) {
      f.violation = k;
      f.previous = prev;
      f.current = cur;
      break;
    }
  }
  return f;
}

struct MonotonicityReport {
  unsigned m_from = 0;
  unsigned m_to = 0;
  std::vector<MonotonicityFinding> plain;     ///< c_k/c_{k-1}, one per m
  std::vector<MonotonicityFinding> weighted;  ///< k c_k/c_{k-1}, one per m
  std::optional<unsigned> smallest_weighted_violation;
  bool plain_always_decreasing = true;
};

inline MonotonicityReport c_monotonicity_search(unsigned m_from, unsigned m_to, unsigned jobs = 1) {
  if (m_from < 2) throw std::invalid_argument("c_monotonicity_search: m_from must be >= 2");
  MonotonicityReport rep;
  rep.m_from = m_from;
  rep.m_to = m_to;
  if (m_to < m_from) return rep;
  rep.plain.resize(m_to - m_from + 1);
  rep.weighted.resize(m_to - m_from + 1);
  for_each_c(m_from, m_to, jobs, [&](unsigned m, const CSequence& c) {
    rep.plain[m - m_from] = monotonicity_of(c, false);
    rep.weighted[m - m_from] = monotonicity_of(c, true);
  });
  for (const auto& f : rep.plain)
    if (f.violation) rep.plain_always_decreasing = false;
  for (const auto& f : rep.weighted)
    if (f.violation) {
      rep.smallest_weighted_violation = f.m;
      break;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Continued fractions in y
// ---------------------------------------------------------------------------

/// Q_k = (k^2 - t^2) y^2 / ((2k+1)(2 - y) - Q_{k+1}) for k = levels..1, with
/// Q_{levels+1} = 0. Polynomial coefficients are in the second variable, here
/// called `x`, and `k_squared_minus` supplies k^2 - t^2 as a polynomial in x.
template <class Numer>
BivariateSeries y_cf_tail(std::size_t order, std::size_t levels, Numer&& k_squared_minus) {
  BivariateSeries tail(order);
  const BivariateSeries two_minus_y(order, {Polynomial(2), Polynomial(-1)});
  for (std::size_t k = levels; k >= 1; --k) {
    BivariateSeries den = two_minus_y * Rational(2 * static_cast<long>(k) + 1) - tail;
    BivariateSeries num = BivariateSeries::monomial(order, 2, k_squared_minus(k));
    tail = num * den.inverse();
  }
  return tail;
}

/// ((1-y)^t - 1)/t as the continued fraction
///   -2y / (2 - y + t y - (1-t^2) y^2 / (3(2-y) - (4-t^2) y^2 / (5(2-y) - ...)))
/// expanded in y over Q[t], against the binomial series
///   sum_{n>=1} (-y)^n (t-1)(t-2)...(t-n+1) / n!.
struct BinomialCfReport {
  std::size_t order = 0;
  std::size_t levels = 0;
  BivariateSeries cf{0};
  BivariateSeries direct{0};
  CheckResult result{"binomial-cf"};
};

inline BivariateSeries binomial_direct_series(std::size_t order) {
  BivariateSeries s(order);
  Polynomial falling = 1;  // (t-1)...(t-n+1)
  Integer fact = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    if (n > 1) falling *= Polynomial::linear(Rational(-static_cast<long>(n - 1)), 1);
    fact *= static_cast<unsigned long>(n);
    s[n] = falling * make_rational(Integer(n % 2 == 0 ? 1 : -1), fact);
  }
  return s;
}

inline BinomialCfReport binomial_cf_check(std::size_t order) {
  if (order < 4) throw std::invalid_argument("binomial_cf_check: order must be >= 4");
  BinomialCfReport rep;
  rep.order = order;
  rep.levels = order / 2 + 1;
  const Polynomial t = Polynomial::monomial(1);
  BivariateSeries q1 = y_cf_tail(order, rep.levels, [&](std::size_t k) {
    return Polynomial(Rational(static_cast<long>(k * k))) - t * t;
  });
  // 2 - y + t y - Q_1
  BivariateSeries den = BivariateSeries(order, {Polynomial(2), Polynomial(-1) + t}) - q1;
  rep.cf = BivariateSeries::monomial(order, 1, Polynomial(-2)) * den.inverse();
  rep.direct = binomial_direct_series(order);
  for (std::size_t n = 0; n <= order; ++n) {
    for (long i = 0; i <= std::max(rep.cf[n].degree(), rep.direct[n].degree()); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      rep.result.record(rep.cf[n].coeff(idx) == rep.direct[n].coeff(idx),
                        {static_cast<unsigned>(n), static_cast<unsigned>(i), "[y^n t^i] cf == binomial",
                         rep.cf[n].coeff(idx), rep.direct[n].coeff(idx)});
    }
  }
  return rep;
}

/// Positivity through the continued fraction
///   2 sqrt(1-z) / ((1-y)^{sqrt(1-z)} - 1) = -2/y + 1 - sqrt(1-z) + Q_1 / y,
///   Q_k = (k^2 - 1 + z) y^2 / ((2k+1)(2-y) - Q_{k+1}),
/// truncated after floor(m_max/2) + 1 levels. The y-derivative of the
/// bracketed function is 1/y^2 + (Q_1/y)'/2; every coefficient of (Q_1/y)'
/// through y^{m_max} must have nonnegative z-coefficients. The product
/// (log(1-y)/y)^2 (1 + y^2 (Q_1/y)'/2) is returned for comparison with the
/// generating function.
struct PositivityReport {
  unsigned m_max = 0;
  std::size_t levels = 0;
  BivariateSeries derivative{0};  ///< (Q_1/y)' through y^{m_max}
  BivariateSeries generating{0};  ///< through y^{m_max}
  CheckResult result{"cf-positivity"};
};

inline PositivityReport positivity_truncation_check(unsigned m_max) {
  if (m_max < 2) throw std::invalid_argument("positivity_truncation_check: m_max must be >= 2");
  PositivityReport rep;
  rep.m_max = m_max;
  rep.levels = m_max / 2 + 1;
  const std::size_t order = m_max + 2;
  const Polynomial z = Polynomial::monomial(1);
  BivariateSeries q1 = y_cf_tail(order, rep.levels, [&](std::size_t k) {
    return Polynomial(Rational(static_cast<long>(k * k) - 1)) + z;
  });
  // Q_1 = O(y^2), so Q_1/y loses nothing.
  const BivariateSeries tail = q1.shifted_down(1);
  rep.derivative = tail.derivative().truncated(m_max);
  for (unsigned n = 0; n <= m_max; ++n) {
    const Polynomial& p = rep.derivative[n];
    for (long i = 0; i <= p.degree(); ++i)
      rep.result.record(p.coeff(static_cast<std::size_t>(i)) >= 0,
                        {n, static_cast<unsigned>(i), "[y^n z^i] (Q_1/y)' >= 0", p.coeff(static_cast<std::size_t>(i)),
                         Rational(0)});
  }
  const BivariateSeries lambda = lift(log_ratio_series(m_max));
  BivariateSeries inner = rep.derivative.shifted_up(2).truncated(m_max) * make_rational(1, 2);
  inner[0] += Polynomial(1);
  rep.generating = lambda * lambda * inner;
  for (unsigned n = 0; n <= m_max; ++n) {
    const Polynomial& p = rep.generating[n];
    for (long i = 0; i <= p.degree(); ++i)
      rep.result.record(p.coeff(static_cast<std::size_t>(i)) >= 0,
                        {n, static_cast<unsigned>(i), "[y^n z^i] generating >= 0", p.coeff(static_cast<std::size_t>(i)),
                         Rational(0)});
  }
  return rep;
}

/// The truncated CF route reproduces the generating function exactly.
inline CheckResult check_positivity_vs_genfunc(const PositivityReport& rep) {
  CheckResult r{"cf-positivity"};
  const BernoulliTable bern = bernoulli_table(rep.m_max + 2);
  const BivariateSeries g = generating_function_series(rep.m_max + 2, bern);
  for (unsigned n = 0; n <= rep.m_max; ++n) {
    const long deg = std::max(g[n].degree(), rep.generating[n].degree());
    for (long i = 0; i <= deg; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      r.record(g[n].coeff(idx) == rep.generating[n].coeff(idx),
               {n, static_cast<unsigned>(i), "cf route == generating function", rep.generating[n].coeff(idx),
                g[n].coeff(idx)});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// sinh family
// ---------------------------------------------------------------------------

inline CheckResult check_sinh_logconcave(const SinhSeries& s) {
  CheckResult r{"logconcave-sinh"};
  for (unsigned k = 0; k < s.d.size(); ++k) r.record(s.d[k] > 0, {0, k, "d_k > 0", s.d[k], Rational(0)});
  for (unsigned k = 1; k + 1 < s.d.size(); ++k) {
    const Rational lhs = s.d[k] * s.d[k];
    const Rational rhs = s.d[k - 1] * s.d[k + 1];
    r.record(lhs >= rhs, {0, k, "d_k^2 >= d_{k-1} d_{k+1}", lhs, rhs});
  }
  return r;
}

inline const std::vector<Rational>& default_sinh_radii() {
  static const std::vector<Rational> radii = {make_rational(1, 4), Rational(1), Rational(100), Rational(10000)};
  return radii;
}

// ---------------------------------------------------------------------------
// Seeded sample points
// ---------------------------------------------------------------------------

/// Replayable rational points drawn from the raw mt19937_64 stream, so the
/// sequence does not depend on the standard library's distributions.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on a 2^-20 lattice in [lo, hi).
  Rational uniform(const Rational& lo, const Rational& hi) {
    const std::uint64_t bits = gen_() >> 44;  // 20 bits
    return lo + (hi - lo) * make_rational(static_cast<long>(bits), 1L << 20);
  }

  /// A non-pole rational with small denominator in [lo, hi).
  Rational small(long lo, long hi) {
    const long den = 2 + static_cast<long>(gen_() % 7);
    const long span = (hi - lo) * den;
    const long num = lo * den + static_cast<long>(gen_() % static_cast<std::uint64_t>(span));
    Rational q = make_rational(num, den);
    if (q.get_den() == 1) q += make_rational(1, 2 * den + 1);
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Continued fraction vs series
// ---------------------------------------------------------------------------

struct CfSeriesReport {
  CheckResult exact{"cf-series"};
  long min_agreement_bits = 0;  ///< floating cases, relative to the series route
  unsigned floating_points = 0;
};

/// Both continued fractions against the partial fractions: exactly at the
/// given rational points, and at `n_complex` seeded points 0 < sigma < 1,
/// |t| <= 1 at `precision` bits.
inline CfSeriesReport cf_series_check(unsigned m_max, const std::vector<Rational>& rational_points,
                                      unsigned n_complex, std::uint64_t seed, mpfr_prec_t precision) {
  CfSeriesReport rep;
  rep.min_agreement_bits = precision;
  RationalSampler sampler(seed);
  std::vector<ComplexValue> complex_points;
  for (unsigned i = 0; i < n_complex; ++i) {
    Rational sigma = sampler.uniform(0, 1);
    if (sigma == 0) sigma = make_rational(1, 1 << 21);
    Rational t = sampler.uniform(-1, 1);
    complex_points.emplace_back(sigma, t, precision);
  }
  rep.floating_points = n_complex;

  for (unsigned m = 1; m <= m_max; ++m) {
    for (ExpansionKind kind : {ExpansionKind::G, ExpansionKind::F}) {
      const FactorialExpansion e = kind == ExpansionKind::G ? g_expansion(m) : f_expansion(m);
      if (e.size() < 2) continue;
      const ContinuedFraction cf = euler_cf(e);
      const PartialFraction pf = kind == ExpansionKind::G ? build_g(m) : build_f(m);
      for (const auto& s : rational_points) {
        const Rational lhs = eval_cf(cf, s).value;
        const Rational rhs = cf_target(kind, m, pf, s);
        rep.exact.record(lhs == rhs, {m, kind == ExpansionKind::G ? 0U : 1U,
                                      std::string(to_string(kind)) + "-form cf == 1/normalized - 1 at s=" + s.get_str(),
                                      lhs, rhs});
      }
      for (const auto& s : complex_points) {
        const ComplexValue lhs = eval_cf(cf, s).value;
        const ComplexValue rhs = cf_target(kind, m, pf, s);
        rep.min_agreement_bits = std::min(rep.min_agreement_bits, agreement_bits(lhs, rhs));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Convergence to zeta
// ---------------------------------------------------------------------------

struct ConvergenceRow {
  ComplexValue s;
  unsigned m = 0;
  ComplexValue value;      ///< F_m(s) / ((s-1) G_m(s))
  BigFloat error;          ///< |value - zeta(s)|
  long agreement_bits = 0; ///< 128-bit recomputation vs working precision
};

inline ComplexValue zeta_approximant(unsigned m, const ComplexValue& s) {
  const PartialFraction f = build_f(m);
  const PartialFraction g = build_g(m);
  const ComplexValue one(Rational(1), s.precision());
  return eval_pf_value(f, s) / ((s - one) * eval_pf_value(g, s));
}

inline std::vector<ConvergenceRow> convergence_probe(const std::vector<ComplexValue>& points,
                                                     const std::vector<unsigned>& m_list, mpfr_prec_t precision) {
  std::vector<ConvergenceRow> rows;
  for (const auto& s : points) {
    if (s.real().sign() <= 0) throw std::invalid_argument("convergence_probe: requires Re s > 0");
    const ComplexValue zeta = zeta_reference(s, precision);
    for (unsigned m : m_list) {
      const CheckedValue v = cross_checked(s, [m](const ComplexValue& x) { return zeta_approximant(m, x); });
      rows.push_back({s, m, v.value, (v.value - zeta).abs(), v.agreement_bits});
    }
  }
  return rows;
}

}  // namespace zetacf

#endif  // ZETACF_EXPERIMENTS_HPP
