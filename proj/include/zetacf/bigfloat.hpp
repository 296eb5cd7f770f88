#ifndef ZETACF_BIGFLOAT_HPP
#define ZETACF_BIGFLOAT_HPP

#include <zetacf/rational.hpp>

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace zetacf {

/// Binary floating-point value of fixed precision, owning an mpfr_t. Every
/// arithmetic operation is correctly rounded (round-to-nearest) at the larger
/// of the operand precisions.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(double x, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }
  BigFloat(const Integer& z, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Exact rational value of this binary float.
  Rational to_rational() const {
    if (!is_finite()) throw std::domain_error("BigFloat::to_rational: not finite");
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rational q(m);
    if (e >= 0) {
      mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return q;
  }

  std::string to_string(int digits = 30) const {
    char* out = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&out, fmt.c_str(), v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

#define ZETACF_BIGFLOAT_BINOP(op, fn)                                                 \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {                 \
    BigFloat r(std::max(a.precision(), b.precision()));                               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                                  \
    return r;                                                                         \
  }                                                                                   \
  BigFloat& operator op##=(const BigFloat& b) {                                       \
    if (b.precision() > precision()) mpfr_prec_round(v_, b.precision(), MPFR_RNDN);   \
    fn(v_, v_, b.v_, MPFR_RNDN);                                                      \
    return *this;                                                                     \
  }
  ZETACF_BIGFLOAT_BINOP(+, mpfr_add)
  ZETACF_BIGFLOAT_BINOP(-, mpfr_sub)
  ZETACF_BIGFLOAT_BINOP(*, mpfr_mul)
  ZETACF_BIGFLOAT_BINOP(/, mpfr_div)
#undef ZETACF_BIGFLOAT_BINOP

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

#define ZETACF_BIGFLOAT_UNARY(name, fn)            \
  friend BigFloat name(const BigFloat& a) {        \
    BigFloat r(a.precision());                     \
    fn(r.v_, a.v_, MPFR_RNDN);                     \
    return r;                                      \
  }
  ZETACF_BIGFLOAT_UNARY(sqrt, mpfr_sqrt)
  ZETACF_BIGFLOAT_UNARY(exp, mpfr_exp)
  ZETACF_BIGFLOAT_UNARY(log, mpfr_log)
  ZETACF_BIGFLOAT_UNARY(sin, mpfr_sin)
  ZETACF_BIGFLOAT_UNARY(cos, mpfr_cos)
  ZETACF_BIGFLOAT_UNARY(abs, mpfr_abs)
#undef ZETACF_BIGFLOAT_UNARY

  friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision (exact).
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

/// Complex value with BigFloat parts. Products and quotients use the textbook
/// formulas; each component error is a small multiple of 2^-P relative to the
/// modulus.
class ComplexValue {
 public:
  explicit ComplexValue(mpfr_prec_t prec = BigFloat::kDefaultPrecision) : re_(prec), im_(prec) {}
  ComplexValue(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexValue(const Rational& re, const Rational& im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  ComplexValue(const Rational& re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}
  ComplexValue(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return sqrt(norm()); }
  BigFloat arg() const { return atan2(im_, re_); }

  ComplexValue conj() const { return {re_, -im_}; }

  friend ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ComplexValue operator-(const ComplexValue& a) { return {-a.re_, -a.im_}; }
  friend ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexValue operator*(const ComplexValue& a, const BigFloat& k) { return {a.re_ * k, a.im_ * k}; }
  friend ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    BigFloat d = b.norm();
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  friend ComplexValue operator/(const ComplexValue& a, const BigFloat& k) { return {a.re_ / k, a.im_ / k}; }

  ComplexValue& operator+=(const ComplexValue& b) { return *this = *this + b; }
  ComplexValue& operator-=(const ComplexValue& b) { return *this = *this - b; }
  ComplexValue& operator*=(const ComplexValue& b) { return *this = *this * b; }

  /// exp(z) = e^re (cos im + i sin im).
  friend ComplexValue exp(const ComplexValue& z) {
    BigFloat r = exp(z.re_);
    return {r * cos(z.im_), r * sin(z.im_)};
  }

  std::string to_string(int digits = 30) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + (im_.sign() < 0 ? -im_ : im_).to_string(digits) + "i";
  }

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Number of leading bits on which a and b agree, measured relative to |b|.
/// Returns the precision cap when they agree to working precision.
inline long agreement_bits(const ComplexValue& a, const ComplexValue& b) {
  BigFloat diff = (a - b).abs();
  BigFloat ref = b.abs();
  long cap = static_cast<long>(std::min(a.precision(), b.precision()));
  if (diff.is_zero()) return cap;
  if (ref.is_zero()) return 0;
  BigFloat rel = diff / ref;
  long e = mpfr_get_exp(rel.get());
  return std::clamp(-e + 1, 0L, cap);
}

}  // namespace zetacf

#endif  // ZETACF_BIGFLOAT_HPP
