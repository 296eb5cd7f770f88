#ifndef ZETACF_ZERO_SCAN_HPP
#define ZETACF_ZERO_SCAN_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/polynomial.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zetacf {

struct Rectangle {
  Rational sigma_min;
  Rational sigma_max;
  Rational t_min;
  Rational t_max;
};

struct ZeroScanResult {
  Rectangle rect;
  long winding = 0;
  bool certified = false;
  Rational boundary_min;     ///< lower bound on min |p| over the boundary
  std::size_t subdivisions = 0;
  std::size_t segments = 0;  ///< certified boundary pieces
  ExactComplex witness;      ///< midpoint of the first uncertifiable piece
};

namespace detail {

/// Coefficients of q(u) = p(c + u d), exact.
inline std::vector<ExactComplex> taylor_shift(const Polynomial& p, const ExactComplex& c, const ExactComplex& d) {
  const std::size_t n = p.coefficients().size();
  std::vector<ExactComplex> q(n, ExactComplex(0));
  for (std::size_t i = 0; i < n; ++i) q[i] = ExactComplex(p.coeff(i));
  // Repeated synthetic division by (x - c) gives the coefficients about c.
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) q[j - 1] = q[j - 1] + c * q[j];
  ExactComplex dp(1);
  for (std::size_t i = 1; i < n; ++i) {
    dp = dp * d;
    q[i] = q[i] * dp;
  }
  return q;
}

inline ExactComplex eval_at(const std::vector<ExactComplex>& q, const Rational& u) {
  ExactComplex acc(0);
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * ExactComplex(u) + q[i];
  return acc;
}

/// Upper bound on sqrt(x) as a rational.
inline Rational sqrt_up(const Rational& x, mpfr_prec_t prec) {
  BigFloat v(x, prec, MPFR_RNDU);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDU);
  return v.to_rational();
}

inline Rational sqrt_down(const Rational& x, mpfr_prec_t prec) {
  BigFloat v(x, prec, MPFR_RNDD);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDD);
  return v.to_rational();
}

}  // namespace detail

/// Winding number of p around the rectangle (counterclockwise), i.e. the number
/// of zeros inside.
///
/// Each boundary piece [a, b] is written as q(u) = p(mid + u (b - a)/2),
/// u in [-1, 1]. If T = sum_{i>=1} |q_i| satisfies T < |q_0| / sqrt 2, the
/// argument of p stays within pi/4 of arg q_0 on the piece, so the change of
/// argument along it is the principal argument of q(1)/q(-1). Pieces that fail
/// are halved; if a piece fails at `max_depth` the scan is uncertifiable.
/// The Taylor coefficients are exact, and only the final square roots are
/// rounded (outward), so a certified answer carries no floating error.
inline ZeroScanResult zero_scan(const Polynomial& p, const Rectangle& rect, mpfr_prec_t precision = 256,
                                unsigned max_depth = 40) {
  if (rect.sigma_min >= rect.sigma_max || rect.t_min >= rect.t_max)
    throw std::invalid_argument("zero_scan: degenerate rectangle");
  ZeroScanResult out;
  out.rect = rect;
  if (p.is_zero()) throw std::invalid_argument("zero_scan: zero polynomial");

  const std::vector<ExactComplex> corners = {{rect.sigma_min, rect.t_min},
                                             {rect.sigma_max, rect.t_min},
                                             {rect.sigma_max, rect.t_max},
                                             {rect.sigma_min, rect.t_max}};
  struct Piece {
    ExactComplex a, b;
    unsigned depth;
  };
  std::vector<Piece> stack;
  for (std::size_t i = 4; i-- > 0;) stack.push_back({corners[i], corners[(i + 1) % 4], 0});

  double total_angle = 0;
  std::optional<Rational> min_modulus;
  const ExactComplex half(make_rational(1, 2));
  while (!stack.empty()) {
    Piece piece = stack.back();
    stack.pop_back();
    const ExactComplex mid = (piece.a + piece.b) * half;
    const ExactComplex d = (piece.b - piece.a) * half;
    const auto q = detail::taylor_shift(p, mid, d);

    Rational tail = 0;
    for (std::size_t i = 1; i < q.size(); ++i) tail += detail::sqrt_up(q[i].norm(), precision);
    const Rational n0 = q[0].norm();
    if (n0 != 0 && 2 * tail * tail < n0) {
      const ExactComplex end = detail::eval_at(q, 1);
      const ExactComplex start = detail::eval_at(q, -1);
      const ExactComplex w = end * ExactComplex(start.re, -start.im);
      total_angle += atan2(BigFloat(w.im, 64), BigFloat(w.re, 64)).to_double();
      const Rational lower = detail::sqrt_down(n0, precision) - tail;
      if (!min_modulus || lower < *min_modulus) min_modulus = lower;
      ++out.segments;
      continue;
    }
    if (piece.depth >= max_depth) {
      out.certified = false;
      out.witness = mid;
      out.boundary_min = 0;
      return out;
    }
    ++out.subdivisions;
    stack.push_back({mid, piece.b, piece.depth + 1});
    stack.push_back({piece.a, mid, piece.depth + 1});
  }

  const double turns = total_angle / (2 * std::numbers::pi);
  out.winding = std::lround(turns);
  // Each piece contributes less than pi/2 exactly, so only accumulated double
  // rounding separates `turns` from an integer.
  if (std::fabs(turns - static_cast<double>(out.winding)) > 1e-6)
    throw std::logic_error("zero_scan: argument total is not a whole number of turns");
  out.certified = true;
  out.boundary_min = *min_modulus;
  return out;
}

}  // namespace zetacf

#endif  // ZETACF_ZERO_SCAN_HPP
