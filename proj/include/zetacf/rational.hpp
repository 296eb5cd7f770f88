#ifndef ZETACF_RATIONAL_HPP
#define ZETACF_RATIONAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetacf {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalize() has run; all helpers below
/// return canonical values.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k) with the convention C(n, k) = 0 for k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// "num/den", always with an explicit denominator.
inline std::string to_exact_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "num/den" or a bare integer.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

/// Decimal approximation with the given number of significant digits.
/// Correctly rounded from the exact value.
inline std::string to_decimal(const Rational& q, int digits = 30) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  char* out = nullptr;
  mpfr_asprintf(&out, fmt.c_str(), x);
  std::string result(out);
  mpfr_free_str(out);
  mpfr_clear(x);
  return result;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Relative-accuracy conversion of a/b to double for huge integers where
/// mpq_get_d would be fine but we want to skip canonicalization.
inline double ratio_to_double(const Integer& a, const Integer& b) {
  long ea = 0, eb = 0;
  double da = mpz_get_d_2exp(&ea, a.get_mpz_t());
  double db = mpz_get_d_2exp(&eb, b.get_mpz_t());
  if (db == 0.0) throw std::domain_error("ratio_to_double: zero denominator");
  return std::ldexp(da / db, static_cast<int>(ea - eb));
}

/// Incrementally grown factorial cache. Not thread-safe; give each thread
/// its own instance.
class FactorialCache {
 public:
  FactorialCache() : values_{Integer(1)} {}

  const Integer& operator()(std::size_t n) {
    while (values_.size() <= n) {
      values_.push_back(values_.back() * static_cast<unsigned long>(values_.size()));
    }
    return values_[n];
  }

 private:
  std::vector<Integer> values_;
};

}  // namespace zetacf

#endif  // ZETACF_RATIONAL_HPP
