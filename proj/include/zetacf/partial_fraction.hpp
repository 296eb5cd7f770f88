#ifndef ZETACF_PARTIAL_FRACTION_HPP
#define ZETACF_PARTIAL_FRACTION_HPP

#include <zetacf/coeff.hpp>
#include <zetacf/polynomial.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>

#include <stdexcept>
#include <variant>
#include <vector>

namespace zetacf {

struct PoleTerm {
  long pole = 0;
  Rational residue;
};

/// sum residue / (s - pole), poles strictly decreasing.
struct PartialFraction {
  std::vector<PoleTerm> terms;
};

/// Returned by evaluation when the argument coincides with a pole.
struct PoleIndicator {
  long pole = 0;
  friend bool operator==(const PoleIndicator&, const PoleIndicator&) = default;
};

template <class S>
using PfValue = std::variant<S, PoleIndicator>;

/// G_m(s) = sum_{j=0}^m (-1)^j a_{m,j} / (s + j - 1).
inline PartialFraction build_g(const CoeffTable& table) {
  if (table.m < 1) throw std::invalid_argument("build_g: m must be >= 1");
  PartialFraction pf;
  for (unsigned j = 0; j <= table.m; ++j)
    pf.terms.push_back({1 - static_cast<long>(j), j % 2 == 0 ? table.a[j] : Rational(-table.a[j])});
  return pf;
}

inline PartialFraction build_g(unsigned m) { return build_g(coeff_table(m)); }

/// F_m(s) = sum_{j=0}^m a_{m,j} B_j / (s + j - 1); zero residues are dropped.
inline PartialFraction build_f(const CoeffTable& table, const BernoulliTable& bern) {
  if (table.m < 1) throw std::invalid_argument("build_f: m must be >= 1");
  if (bern.n_max < table.m) throw std::invalid_argument("build_f: Bernoulli table too short");
  PartialFraction pf;
  for (unsigned j = 0; j <= table.m; ++j) {
    Rational r = table.a[j] * bern.b[j];
    if (r != 0) pf.terms.push_back({1 - static_cast<long>(j), r});
  }
  return pf;
}

inline PartialFraction build_f(unsigned m) { return build_f(coeff_table(m), bernoulli_table(m)); }

template <class S>
PfValue<S> eval_pf(const PartialFraction& pf, const S& s) {
  for (const auto& t : pf.terms)
    if (ScalarOps<S>::equals_integer(s, t.pole)) return PoleIndicator{t.pole};
  S acc = lift_like(Rational(0), s);
  for (const auto& t : pf.terms) acc = acc + lift_like(t.residue, s) / (s - lift_like(Rational(t.pole), s));
  return acc;
}

/// Value or throw; for callers that know s is not a pole.
template <class S>
S eval_pf_value(const PartialFraction& pf, const S& s) {
  auto v = eval_pf(pf, s);
  if (auto* p = std::get_if<PoleIndicator>(&v))
    throw std::domain_error("evaluation at pole " + std::to_string(p->pole));
  return std::get<S>(v);
}

/// pf(s) = scale * numerator(s) / denominator(s), with denominator the monic
/// product of (s - pole) and numerator primitive with integer coefficients and
/// positive leading coefficient.
struct CollapsedForm {
  Rational scale;
  Polynomial numerator;
  Polynomial denominator;
};

inline CollapsedForm collapse(const PartialFraction& pf) {
  Polynomial full = 1;
  for (const auto& t : pf.terms) full *= Polynomial::linear(Rational(-t.pole), 1);
  Polynomial num;
  for (const auto& t : pf.terms) num += full.deflate(Rational(t.pole)) * t.residue;
  auto [content, primitive] = num.primitive_part();
  if (primitive.is_zero()) content = 0;
  return {content, primitive, full};
}

/// Numerator of pf over its monic pole product, content-normalized.
inline Polynomial numerator_poly(const PartialFraction& pf) { return collapse(pf).numerator; }

}  // namespace zetacf

#endif  // ZETACF_PARTIAL_FRACTION_HPP
