#ifndef ZETACF_ZETA_REFERENCE_HPP
#define ZETACF_ZETA_REFERENCE_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/rational.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zetacf {

class ReferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of terms for Borwein's eta algorithm at target precision `bits`.
/// The truncation error is below 3 (1 + 2|t|) e^{pi |t| / 2} / (3 + sqrt 8)^n.
inline std::size_t borwein_terms(long bits, double abs_t) {
  const double need = static_cast<double>(bits) * std::log(2.0) + M_PI * abs_t / 2.0 + std::log1p(2.0 * abs_t) +
                      std::log(3.0) + 16.0 * std::log(2.0);
  return static_cast<std::size_t>(std::ceil(need / std::log(3.0 + std::sqrt(8.0)))) + 1;
}

/// zeta(s) for Re s > 0, s != 1, via the alternating eta series with Borwein's
/// convergence acceleration:
///   eta(s) ~ -1/d_n sum_{k<n} (-1)^k (d_k - d_n) / (k+1)^s,
///   d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!),
///   zeta(s) = eta(s) / (1 - 2^{1-s}).
/// Independent of every approximant in this library.
inline ComplexValue zeta_reference(const ComplexValue& s, mpfr_prec_t bits) {
  if (s.real().sign() <= 0) throw ReferenceError("zeta_reference: requires Re s > 0");
  const double abs_t = std::fabs(s.imag().to_double());
  const std::size_t n = borwein_terms(bits, abs_t);
  // The alternating sum cancels roughly log2(d_n) ~ 2.55 n bits.
  const mpfr_prec_t work = bits + static_cast<mpfr_prec_t>(3 * n) + 64;

  std::vector<Integer> d(n + 1);
  {
    Rational acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      acc += make_rational(factorial(n + i - 1) * (Integer(1) << static_cast<mp_bitcnt_t>(2 * i)) *
                               static_cast<unsigned long>(n),
                           factorial(n - i) * factorial(2 * i));
      if (acc.get_den() != 1) throw std::logic_error("zeta_reference: non-integral Borwein coefficient");
      d[i] = acc.get_num();
    }
  }

  ComplexValue ws(BigFloat(s.real().to_rational(), work), BigFloat(s.imag().to_rational(), work));
  ComplexValue sum(work);
  const BigFloat dn(d[n], work);
  for (std::size_t k = 0; k < n; ++k) {
    // (k+1)^{-s} = exp(-s log(k+1))
    BigFloat lg = log(BigFloat(static_cast<long>(k + 1), work));
    ComplexValue power = exp(ComplexValue(-ws.real() * lg, -ws.imag() * lg));
    BigFloat coeff(Integer(d[k] - d[n]), work);
    if (k % 2 == 1) coeff = -coeff;
    sum += power * coeff;
  }
  ComplexValue eta = sum * (-(BigFloat(1L, work) / dn));

  BigFloat ln2 = log(BigFloat(2L, work));
  ComplexValue two_pow = exp(ComplexValue((BigFloat(1L, work) - ws.real()) * ln2, -ws.imag() * ln2));
  ComplexValue denom = ComplexValue(BigFloat(1L, work), BigFloat(0L, work)) - two_pow;
  if (denom.abs() < BigFloat::pow2(-bits / 2, work))
    throw ReferenceError("zeta_reference: 1 - 2^{1-s} vanishes to working precision");
  ComplexValue z = eta / denom;
  return {BigFloat(z.real().to_rational(), bits), BigFloat(z.imag().to_rational(), bits)};
}

}  // namespace zetacf

#endif  // ZETACF_ZETA_REFERENCE_HPP
