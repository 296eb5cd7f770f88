#ifndef ZETACF_SCALAR_HPP
#define ZETACF_SCALAR_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/rational.hpp>

#include <stdexcept>
#include <utility>

namespace zetacf {

/// Gaussian rational: exact complex arithmetic over Q.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational d = b.norm();
    if (d == 0) throw std::domain_error("exact complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
};

/// Uniform access to the scalar types evaluation routines are instantiated
/// with: Rational, ExactComplex and ComplexValue.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational lift(const Rational& q, const Rational& /*like*/) { return q; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool equals_integer(const Rational& x, long n) { return x == n; }
};

template <>
struct ScalarOps<ExactComplex> {
  static ExactComplex lift(const Rational& q, const ExactComplex& /*like*/) { return {q, 0}; }
  static bool is_zero(const ExactComplex& x) { return x.is_zero(); }
  static bool equals_integer(const ExactComplex& x, long n) { return x.im == 0 && x.re == n; }
};

template <>
struct ScalarOps<ComplexValue> {
  static ComplexValue lift(const Rational& q, const ComplexValue& like) { return {q, like.precision()}; }
  static bool is_zero(const ComplexValue& x) { return x.is_zero(); }
  static bool equals_integer(const ComplexValue& x, long n) {
    return x.imag().is_zero() && x.real() == BigFloat(n, x.precision());
  }
};

template <class S>
S lift_like(const Rational& q, const S& like) {
  return ScalarOps<S>::lift(q, like);
}

}  // namespace zetacf

#endif  // ZETACF_SCALAR_HPP
