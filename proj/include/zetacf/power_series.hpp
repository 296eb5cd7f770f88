#ifndef ZETACF_POWER_SERIES_HPP
#define ZETACF_POWER_SERIES_HPP

#include <zetacf/polynomial.hpp>
#include <zetacf/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace zetacf {

/// Coefficient rings a PowerSeries may be built over. Rational for ordinary
/// series; Polynomial for series in y whose coefficients are polynomials in a
/// second variable (z or t).
template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse_unit(const Rational& x) {
    if (x == 0) throw std::domain_error("power series inverse: zero constant term");
    return 1 / x;
  }
};

template <>
struct CoeffRing<Polynomial> {
  static bool is_zero(const Polynomial& x) { return x.is_zero(); }
  // Only nonzero constants are units in Q[z].
  static Polynomial inverse_unit(const Polynomial& x) {
    if (x.is_zero() || !x.is_constant())
      throw std::domain_error("power series inverse: constant term is not a unit");
    return Polynomial(Rational(1) / x.constant_term());
  }
};

/// Truncated power series sum_{n<=N} c_n y^n. Every coefficient up to the
/// truncation order N is exact; results of binary operations carry the
/// smaller of the two orders.
template <class C>
class PowerSeries {
 public:
  using Coeff = C;

  explicit PowerSeries(std::size_t order) : c_(order + 1) {}
  PowerSeries(std::size_t order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  static PowerSeries constant(std::size_t order, const C& value) {
    PowerSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static PowerSeries monomial(std::size_t order, std::size_t degree, const C& value) {
    PowerSeries s(order);
    if (degree <= order) s.c_[degree] = value;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t n) const { return c_.at(n); }
  C& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<C>& coefficients() const { return c_; }

  /// Reduce to a lower truncation order.
  PowerSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: order exceeds available");
    return PowerSeries(order, std::vector<C>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
  }

  /// Index of the first nonzero coefficient, or order()+1 if none.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!CoeffRing<C>::is_zero(c_[i])) return i;
    return c_.size();
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  PowerSeries& operator*=(const Rational& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend PowerSeries operator*(PowerSeries a, const Rational& k) { return a *= k; }
  friend PowerSeries operator*(const Rational& k, PowerSeries a) { return a *= k; }

  /// Multiplies every coefficient by a ring element (e.g. a polynomial in z).
  friend PowerSeries operator*(const C& k, const PowerSeries& a)
    requires(!std::is_same_v<C, Rational>)
  {
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = k * a.c_[i];
    return r;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (CoeffRing<C>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (CoeffRing<C>::is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  /// Multiplicative inverse; the constant term must be a unit of the ring.
  PowerSeries inverse() const {
    const std::size_t n = order();
    PowerSeries r(n);
    const C inv0 = CoeffRing<C>::inverse_unit(c_[0]);
    r.c_[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
      C acc = c_[k] * r.c_[0];
      for (std::size_t i = 1; i < k; ++i) {
        if (CoeffRing<C>::is_zero(c_[i])) continue;
        acc += c_[i] * r.c_[k - i];
      }
      r.c_[k] = -(inv0 * acc);
    }
    return r;
  }

  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

  /// d/dy. The result is exact through order()-1.
  PowerSeries derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries r(order() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<unsigned long>(i));
    return r;
  }

  /// y^k * this; the order grows by k.
  PowerSeries shifted_up(std::size_t k) const {
    PowerSeries r(order() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  /// this / y^k; the first k coefficients must vanish.
  PowerSeries shifted_down(std::size_t k) const {
    if (k > order()) throw std::invalid_argument("shifted_down: shift exceeds order");
    for (std::size_t i = 0; i < k; ++i)
      if (!CoeffRing<C>::is_zero(c_[i])) throw std::domain_error("shifted_down: nonzero low coefficient");
    return PowerSeries(order() - k, std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  /// Substitutes y -> k*y.
  PowerSeries scaled_variable(const Rational& k) const {
    PowerSeries r(*this);
    Rational p = 1;
    for (auto& x : r.c_) {
      x *= p;
      p *= k;
    }
    return r;
  }

  PowerSeries pow(unsigned e) const {
    PowerSeries result = constant(order(), C(Rational(1)));
    PowerSeries base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) c_.resize(order + 1);
  }

  std::vector<C> c_;
};

using RationalSeries = PowerSeries<Rational>;
/// Series in y whose coefficients are polynomials in a second variable.
using BivariateSeries = PowerSeries<Polynomial>;

/// log(1 - y) = -sum_{n>=1} y^n / n, through order N.
template <class C = Rational>
PowerSeries<C> log_one_minus(std::size_t order) {
  PowerSeries<C> s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = C(make_rational(-1, static_cast<long>(n)));
  return s;
}

/// (1 - y)^{-1} through order N.
template <class C = Rational>
PowerSeries<C> geometric(std::size_t order) {
  PowerSeries<C> s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = C(Rational(1));
  return s;
}

/// Promotes a rational series to a bivariate one with constant coefficients.
inline BivariateSeries lift(const RationalSeries& s) {
  BivariateSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r[i] = Polynomial(s[i]);
  return r;
}

}  // namespace zetacf

#endif  // ZETACF_POWER_SERIES_HPP
