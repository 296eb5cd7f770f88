#ifndef ZETACF_SINH_SERIES_HPP
#define ZETACF_SINH_SERIES_HPP

#include <zetacf/power_series.hpp>
#include <zetacf/rational.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zetacf {

/// Coefficients of z^k in r^2 (1-z) / sinh^2(r sqrt(1-z) / 2).
///
/// With u = 1 - z the function is 2 / S(r^2 u) where
/// S(w) = sum_{n>=1} w^{n-1} / (2n)! is entire. S is cut after
/// `denominator_terms` terms (chosen so the first omitted term, even after
/// the binomial growth of the z re-expansion, is below 2^-320), the
/// polynomial is re-expanded exactly in z, and the reciprocal is taken as a
/// power series in z. Every d[k] is therefore an exact rational function of
/// r^2 for the truncated S.
struct SinhSeries {
  Rational r_squared;
  std::size_t denominator_terms = 0;
  std::vector<Rational> d;
};

/// Number of terms of S needed for the given r^2 and output length.
inline std::size_t sinh_denominator_terms(const Rational& r_squared, std::size_t n_terms) {
  const double w = r_squared.get_d();
  const double cutoff = -320.0 * std::log(2.0);
  for (std::size_t n = n_terms + 8;; ++n) {
    const double nn = static_cast<double>(n);
    // log of w^{n-1} 2^{n} / (2n)!, an upper bound on the influence of term n
    double log_term = (nn - 1.0) * std::log(w) + nn * std::log(2.0) - std::lgamma(2.0 * nn + 1.0);
    double ratio = 2.0 * w / ((2.0 * nn + 1.0) * (2.0 * nn + 2.0));
    if (log_term < cutoff && ratio < 0.5) return n;
  }
}

inline SinhSeries sinh_series(const Rational& r_squared, std::size_t n_terms) {
  if (r_squared <= 0) throw std::invalid_argument("sinh_series: r_squared must be positive");
  if (n_terms < 1) throw std::invalid_argument("sinh_series: n_terms must be >= 1");
  const std::size_t terms = sinh_denominator_terms(r_squared, n_terms);
  const std::size_t order = n_terms - 1;

  // Coefficient of z^k in sum_{n=1}^{terms} (r^2)^{n-1} (1-z)^{n-1} / (2n)!,
  // over the common denominator q^{terms-1} (2 terms)!.
  const Integer p = r_squared.get_num();
  const Integer q = r_squared.get_den();
  std::vector<Integer> numer(terms + 1);  // numer[n] = p^{n-1} q^{terms-n} (2 terms)!/(2n)!
  {
    std::vector<Integer> pp(terms), qq(terms);
    pp[0] = 1;
    qq[0] = 1;
    for (std::size_t i = 1; i < terms; ++i) {
      pp[i] = pp[i - 1] * p;
      qq[i] = qq[i - 1] * q;
    }
    Integer fall = 1;  // (2 terms)! / (2n)!, built from n = terms downward
    for (std::size_t n = terms; n >= 1; --n) {
      numer[n] = pp[n - 1] * qq[terms - n] * fall;
      fall *= static_cast<unsigned long>(2 * n);
      fall *= static_cast<unsigned long>(2 * n - 1);
    }
  }
  Integer common = 1;
  mpz_pow_ui(common.get_mpz_t(), q.get_mpz_t(), terms - 1);
  common *= factorial(2 * terms);

  RationalSeries denom(order);
  for (std::size_t k = 0; k <= order; ++k) {
    Integer acc = 0;
    for (std::size_t n = k + 1; n <= terms; ++n) acc += binomial(n - 1, k) * numer[n];
    if (k % 2 == 1) acc = -acc;
    denom[k] = make_rational(acc, common);
  }

  RationalSeries value = denom.inverse() * Rational(2);
  return {r_squared, terms, value.coefficients()};
}

}  // namespace zetacf

#endif  // ZETACF_SINH_SERIES_HPP
