#ifndef ZETACF_CONTINUED_FRACTION_HPP
#define ZETACF_CONTINUED_FRACTION_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/coeff.hpp>
#include <zetacf/errors.hpp>
#include <zetacf/partial_fraction.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetacf {

enum class ExpansionKind { G, F };

inline const char* to_string(ExpansionKind k) { return k == ExpansionKind::G ? "G" : "F"; }

/// alpha + beta s
struct Linear {
  Rational c0;
  Rational c1;

  template <class S>
  S operator()(const S& s) const {
    return lift_like(c0, s) + lift_like(c1, s) * s;
  }
  Rational operator()(const Rational& s) const { return c0 + c1 * s; }
  friend bool operator==(const Linear& a, const Linear& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
};

/// sum_j terms[j] / (d_1(s) d_2(s) ... d_j(s)) with d_j(s) = s + shift[j].
///
/// G form (m s (s-1) G_m(s)): base = a_{m-1,j}, weight = (j+1)!, shift = j.
/// F form ((m+1) s F_m(s)):   base = c_{m,j},   weight = 2^{j-1}(j-1)! (1 at j=0),
///                             shift = 2j - 3.
/// terms[j] = weight[j] * base[j].
struct FactorialExpansion {
  ExpansionKind kind = ExpansionKind::G;
  unsigned m = 0;
  std::vector<Rational> base;
  std::vector<Rational> weight;
  std::vector<Rational> terms;
  std::vector<long> shift;  ///< shift[0] unused

  std::size_t size() const { return terms.size(); }
  Linear factor(std::size_t j) const { return {Rational(shift.at(j)), Rational(1)}; }
};

template <class S>
S eval_expansion(const FactorialExpansion& e, const S& s) {
  // T_0 + (T_1 + (T_2 + ...)/d_2)/d_1
  S acc = lift_like(Rational(0), s);
  for (std::size_t j = e.size(); j-- > 1;) acc = (lift_like(e.terms[j], s) + acc) / e.factor(j)(s);
  return lift_like(e.terms[0], s) + acc;
}

/// The rational function an expansion reproduces: m s (s-1) G_m(s) or
/// (m+1) s F_m(s).
template <class S>
S expansion_target(ExpansionKind kind, unsigned m, const PartialFraction& pf, const S& s) {
  S v = eval_pf_value(pf, s);
  if (kind == ExpansionKind::G)
    return lift_like(Rational(m), s) * s * (s - lift_like(Rational(1), s)) * v;
  return lift_like(Rational(m + 1), s) * s * v;
}

namespace detail {

inline void check_expansion(const FactorialExpansion& e, const PartialFraction& pf) {
  static const std::array<Rational, 3> points = {make_rational(7, 2), make_rational(13, 3), make_rational(19, 5)};
  for (const auto& s : points) {
    if (eval_expansion(e, s) != expansion_target(e.kind, e.m, pf, s))
      throw ConsistencyError(std::string(to_string(e.kind)) + "-form expansion does not reproduce its target at s=" +
                             s.get_str() + ", m=" + std::to_string(e.m));
  }
}

}  // namespace detail

/// m s (s-1) G_m(s) = sum_{j<m} (j+1)! a_{m-1,j} / ((s+1)...(s+j)).
inline FactorialExpansion g_expansion(unsigned m) {
  if (m < 1) throw std::invalid_argument("g_expansion: m must be >= 1");
  const CoeffTable prev = coeff_table(m - 1);
  FactorialExpansion e;
  e.kind = ExpansionKind::G;
  e.m = m;
  Integer w = 1;
  for (unsigned j = 0; j < m; ++j) {
    w *= j + 1;
    e.base.push_back(prev.a[j]);
    e.weight.emplace_back(w);
    e.terms.push_back(Rational(w) * prev.a[j]);
    e.shift.push_back(static_cast<long>(j));
  }
  detail::check_expansion(e, build_g(m));
  return e;
}

inline FactorialExpansion f_expansion(const CSequence& c, const PartialFraction& f) {
  FactorialExpansion e;
  e.kind = ExpansionKind::F;
  e.m = c.m;
  Integer w = 1;
  for (std::size_t j = 0; j < c.c.size(); ++j) {
    if (j >= 2) w *= 2 * static_cast<unsigned long>(j - 1);
    e.base.push_back(c.c[j]);
    e.weight.emplace_back(w);
    e.terms.push_back(Rational(w) * c.c[j]);
    e.shift.push_back(2 * static_cast<long>(j) - 3);
  }
  detail::check_expansion(e, f);
  return e;
}

/// (m+1) s F_m(s) = 1 + sum_{j>=1} 2^{j-1}(j-1)! c_{m,j} / ((s-1)(s+1)...(s+2j-3)).
inline FactorialExpansion f_expansion(unsigned m) {
  if (m < 1) throw std::invalid_argument("f_expansion: m must be >= 1");
  const ScaledCoeffRow row = scaled_coeff_row(m);
  const BernoulliTable bern = bernoulli_table(m);
  return f_expansion(c_direct(row, bern), build_f(coeff_table(row), bern));
}

struct CfLevel {
  Linear numerator;
  Linear denominator;
};

/// numerator_1 / (denominator_1 + numerator_2 / (denominator_2 + ...)).
struct ContinuedFraction {
  ExpansionKind kind = ExpansionKind::G;
  unsigned m = 0;
  std::vector<CfLevel> levels;

  std::size_t depth() const { return levels.size(); }
};

/// Euler's transformation of a factorial expansion with leading term 1 into a
/// continued fraction for 1/(expansion) - 1.
///
/// With rho_j = T_j / (T_{j-1} d_j) the expansion is 1 + rho_1 + rho_1 rho_2 + ...,
/// and Euler's identity gives -rho_1/(1 + rho_1 - rho_2/(1 + rho_2 - ...)).
/// Clearing denominators and scaling level k by 1/w_{k-1} leaves
///   numerator_1 = -(w_1/w_0) b_1
///   numerator_k = -(w_k/w_{k-1}) b_{k-2} b_k d_{k-1}(s)      (k >= 2)
///   denominator_k = (w_k/w_{k-1}) b_k + b_{k-1} d_k(s)
/// where b_j are the base coefficients and w_j the weights.
inline ContinuedFraction euler_cf(const FactorialExpansion& e) {
  if (e.size() < 2) throw std::invalid_argument("euler_cf: expansion needs at least two terms");
  if (e.terms[0] != 1) throw std::invalid_argument("euler_cf: leading term must be 1");
  ContinuedFraction cf;
  cf.kind = e.kind;
  cf.m = e.m;
  for (std::size_t k = 1; k < e.size(); ++k) {
    const Rational ratio = e.weight[k] / e.weight[k - 1];
    CfLevel level;
    if (k == 1) {
      level.numerator = {-ratio * e.base[1], 0};
    } else {
      const Linear d = e.factor(k - 1);
      const Rational scale = -ratio * e.base[k - 2] * e.base[k];
      level.numerator = {scale * d.c0, scale * d.c1};
    }
    const Linear d = e.factor(k);
    level.denominator = {ratio * e.base[k] + e.base[k - 1] * d.c0, e.base[k - 1] * d.c1};
    cf.levels.push_back(level);
  }
  return cf;
}

template <class S>
struct Convergent {
  S p;
  S q;
};

template <class S>
struct CfEvaluation {
  S value;
  std::vector<Convergent<S>> trace;  ///< trace[n] = (p_n, q_n), n = 1..levels
};

/// Evaluates the first `depth + 1` levels (depth 0 is the first level alone).
/// The value comes from the backward recurrence; the forward three-term
/// recurrence p_n = b_n p_{n-1} + a_n p_{n-2} (same for q) supplies the
/// convergent trace.
template <class S>
CfEvaluation<S> eval_cf(const ContinuedFraction& cf, const S& s, std::size_t depth) {
  if (depth >= cf.depth()) throw std::invalid_argument("eval_cf: depth exceeds continued fraction");
  const std::size_t n = depth + 1;

  S tail = lift_like(Rational(0), s);
  for (std::size_t k = n; k-- > 0;) {
    S den = cf.levels[k].denominator(s) + tail;
    if (ScalarOps<S>::is_zero(den)) throw ZeroDenominator(k + 1);
    tail = cf.levels[k].numerator(s) / den;
  }

  CfEvaluation<S> out{tail, {}};
  out.trace.reserve(n);
  S p_prev = lift_like(Rational(1), s), p = lift_like(Rational(0), s);
  S q_prev = lift_like(Rational(0), s), q = lift_like(Rational(1), s);
  for (std::size_t k = 0; k < n; ++k) {
    S a = cf.levels[k].numerator(s);
    S b = cf.levels[k].denominator(s);
    S p_next = b * p + a * p_prev;
    S q_next = b * q + a * q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.trace.push_back({p, q});
  }
  return out;
}

template <class S>
CfEvaluation<S> eval_cf(const ContinuedFraction& cf, const S& s) {
  return eval_cf(cf, s, cf.depth() - 1);
}

/// 1 / (normalized function) - 1 evaluated from the partial fraction; the
/// value every continued fraction must reproduce at full depth.
template <class S>
S cf_target(ExpansionKind kind, unsigned m, const PartialFraction& pf, const S& s) {
  S one = lift_like(Rational(1), s);
  return one / expansion_target(kind, m, pf, s) - one;
}

/// A floating result recomputed at 128 bits; agreement_bits reports how many
/// leading bits the two runs share.
struct CheckedValue {
  ComplexValue value;
  long agreement_bits = 0;
};

template <class Fn>
CheckedValue cross_checked(const ComplexValue& s, Fn&& fn) {
  constexpr mpfr_prec_t kCheckPrecision = 128;
  ComplexValue main = fn(s);
  ComplexValue low_s(BigFloat(s.real().to_rational(), kCheckPrecision),
                     BigFloat(s.imag().to_rational(), kCheckPrecision));
  ComplexValue low = fn(low_s);
  return {main, agreement_bits(low, main)};
}

}  // namespace zetacf

#endif  // ZETACF_CONTINUED_FRACTION_HPP
