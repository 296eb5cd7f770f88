#ifndef ZETACF_POLYNOMIAL_HPP
#define ZETACF_POLYNOMIAL_HPP

#include <zetacf/rational.hpp>

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zetacf {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has no stored coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  // NOLINTNEXTLINE(google-explicit-constructor): constants promote freely
  Polynomial(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  /// a + b x.
  static Polynomial linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::span<const Rational> coefficients() const { return c_; }

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational constant_term() const { return coeff(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& k) {
    if (k == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(r));
  }

  /// p(a + b x), exact.
  Polynomial compose_affine(const Rational& a, const Rational& b) const {
    Polynomial result;
    Polynomial inner = linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * inner + Polynomial(*it);
    return result;
  }

  /// True when every coefficient is >= 0.
  bool all_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x >= 0; });
  }

  /// Divides by the rational content and fixes the sign so that the result
  /// has coprime integer coefficients and a positive leading coefficient.
  /// Returns the factor k with *this == k * result.
  std::pair<Rational, Polynomial> primitive_part() const {
    if (is_zero()) return {Rational(1), {}};
    Integer den_lcm = 1;
    for (const auto& x : c_) den_lcm = lcm(den_lcm, x.get_den());
    Integer num_gcd = 0;
    for (const auto& x : c_) {
      Integer v = x.get_num() * (den_lcm / x.get_den());
      num_gcd = gcd(num_gcd, v);
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (leading() < 0) content = -content;
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x / content);
    return {content, Polynomial(std::move(r))};
  }

  /// Exact quotient by (x - root); throws if the division is not exact.
  Polynomial deflate(const Rational& root) const {
    if (c_.empty()) return {};
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
      carry = c_[i] + carry * root;
      q[i - 1] = carry;
    }
    if (c_[0] + carry * root != 0) throw std::logic_error("deflate: not a root");
    return Polynomial(std::move(q));
  }

  std::string to_string(char var = 's') const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      Rational a = c_[i];
      if (!out.empty()) {
        out += a < 0 ? " - " : " + ";
        a = abs(a);
      } else if (a < 0) {
        out += "-";
        a = -a;
      }
      bool unit = (a == 1 && i > 0);
      if (!unit) out += a.get_str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace zetacf

#endif  // ZETACF_POLYNOMIAL_HPP
