#ifndef ZETACF_COEFF_HPP
#define ZETACF_COEFF_HPP

#include <zetacf/errors.hpp>
#include <zetacf/polynomial.hpp>
#include <zetacf/power_series.hpp>
#include <zetacf/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace zetacf {

// ---------------------------------------------------------------------------
// a_{m,j}: coefficients of p_m(t) = (1 - t)(1 - t/2)...(1 - t/m) = sum (-1)^j a_{m,j} t^j
// ---------------------------------------------------------------------------

/// Row m of the coefficient table kept over the common denominator m!:
/// a_{m,j} = scaled[j] / m!. The scaled entries are the unsigned Stirling
/// numbers of the first kind |s(m+1, j+1)|.
struct ScaledCoeffRow {
  unsigned m = 0;
  std::vector<Integer> scaled{Integer(1)};
  Integer denominator{1};

  /// Row m+1 from row m using a_{m+1,j} = a_{m,j} + a_{m,j-1}/(m+1),
  /// multiplied through by (m+1)!.
  ScaledCoeffRow next() const {
    ScaledCoeffRow r;
    r.m = m + 1;
    r.scaled.assign(scaled.size() + 1, Integer(0));
    for (std::size_t j = 0; j < r.scaled.size(); ++j) {
      if (j < scaled.size()) r.scaled[j] = scaled[j] * r.m;
      if (j > 0) r.scaled[j] += scaled[j - 1];
    }
    r.denominator = denominator * r.m;
    return r;
  }

  Rational a(std::size_t j) const { return make_rational(scaled.at(j), denominator); }
};

inline ScaledCoeffRow scaled_coeff_row(unsigned m) {
  ScaledCoeffRow row;
  while (row.m < m) row = row.next();
  return row;
}

struct CoeffTable {
  unsigned m = 0;
  std::vector<Rational> a;  ///< a[j] = a_{m,j}, j = 0..m
};

inline CoeffTable coeff_table(const ScaledCoeffRow& row) {
  CoeffTable t;
  t.m = row.m;
  t.a.reserve(row.scaled.size());
  for (std::size_t j = 0; j < row.scaled.size(); ++j) t.a.push_back(row.a(j));
  return t;
}

inline CoeffTable coeff_table(unsigned m) { return coeff_table(scaled_coeff_row(m)); }

/// sum_j (-1)^j a_j x^j, i.e. p_m(x).
inline Rational eval_p(const CoeffTable& t, const Rational& x) {
  Rational acc = 0;
  for (std::size_t j = t.a.size(); j-- > 0;) acc = acc * x + ((j % 2 == 0) ? t.a[j] : Rational(-t.a[j]));
  return acc;
}

// ---------------------------------------------------------------------------
// Harmonic numbers
// ---------------------------------------------------------------------------

struct HarmonicValue {
  unsigned m = 0;
  Rational h;
};

inline HarmonicValue harmonic(unsigned m) {
  // Sum over the common denominator m! to avoid m gcd reductions.
  Integer num = 0;
  Integer den = 1;
  for (unsigned r = 1; r <= m; ++r) {
    num = num * r + den;
    den *= r;
  }
  return {m, make_rational(num, den)};
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, B_1 = -1/2
// ---------------------------------------------------------------------------

struct BernoulliTable {
  unsigned n_max = 0;
  std::vector<Rational> b;  ///< b[j] = B_j
};

/// B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k.
inline std::vector<Rational> bernoulli_by_recurrence(unsigned n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1 && n % 2 == 1) continue;  // B_odd = 0 beyond B_1
    Rational acc = 0;
    for (unsigned k = 0; k < n; ++k) {
      if (b[k] == 0) continue;
      acc += Rational(binomial(n + 1, k)) * b[k];
    }
    b[n] = -acc / (n + 1);
  }
  return b;
}

/// Akiyama-Tanigawa tableau. It produces B_1 = +1/2; the sign is flipped to
/// match the convention used everywhere else.
inline std::vector<Rational> bernoulli_akiyama_tanigawa(unsigned n_max) {
  std::vector<Rational> b(n_max + 1);
  std::vector<Rational> row(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    row[m] = make_rational(1, static_cast<long>(m) + 1);
    for (unsigned j = m; j >= 1; --j) row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
    b[m] = row[0];
  }
  if (n_max >= 1) b[1] = -b[1];
  return b;
}

/// Exact B_0..B_{n_max}; the recurrence and the tableau must agree.
inline BernoulliTable bernoulli_table(unsigned n_max) {
  BernoulliTable t{n_max, bernoulli_by_recurrence(n_max)};
  auto check = bernoulli_akiyama_tanigawa(n_max);
  for (unsigned j = 0; j <= n_max; ++j)
    if (check[j] != t.b[j]) throw ConsistencyError("Bernoulli routes disagree at B_" + std::to_string(j));
  return t;
}

// ---------------------------------------------------------------------------
// c_{m,k}: coefficients of (m+1) s F_m(s) in the basis
//   1, 1/(s-1), 2/((s-1)(s+1)), ..., 2^{j-1}(j-1)!/((s-1)(s+1)...(s+2j-3))
// ---------------------------------------------------------------------------

struct CSequence {
  unsigned m = 0;
  std::vector<Rational> c;  ///< c[0..K], K = floor(m/2) + 1
};

inline std::size_t c_length(unsigned m) { return m / 2 + 2; }

/// c_{m,k} = (m+1)(-1)^{k-1} sum_{j<=m/2} a_{m,2j}(1-2j) B_{2j} C(j, k-1).
/// All terms are put over one integer denominator before summing.
inline CSequence c_direct(const ScaledCoeffRow& row, const BernoulliTable& bern) {
  const unsigned m = row.m;
  if (m < 1) throw std::invalid_argument("c_direct: m must be >= 1");
  if (bern.n_max < m) throw std::invalid_argument("c_direct: Bernoulli table too short");
  const unsigned half = m / 2;

  Integer common = 1;
  for (unsigned j = 0; j <= half; ++j) common = lcm(common, bern.b[2 * j].get_den());
  std::vector<Integer> w(half + 1);
  for (unsigned j = 0; j <= half; ++j) {
    const Rational& b = bern.b[2 * j];
    w[j] = row.scaled[2 * j] * (1 - 2 * static_cast<long>(j)) * b.get_num() * (common / b.get_den());
  }
  const Integer den = row.denominator * common;

  CSequence out;
  out.m = m;
  out.c.resize(c_length(m));
  out.c[0] = 1;
  for (unsigned k = 1; k < out.c.size(); ++k) {
    Integer acc = 0;
    for (unsigned j = k - 1; j <= half; ++j) acc += w[j] * binomial(j, k - 1);
    if ((k - 1) % 2 == 1) acc = -acc;
    out.c[k] = make_rational(acc * (m + 1), den);
  }
  return out;
}

inline CSequence c_direct(unsigned m) { return c_direct(scaled_coeff_row(m), bernoulli_table(m)); }

/// Recovers c_{m,k} from the poles of (m+1) s F_m(s) - 1 alone.
///
/// F_m has residue a_{m,j} B_j at 1-j, so s F_m(s) has residue (1-j) a_{m,j} B_j
/// there; the j = 1 and odd j >= 3 residues vanish. The basis function
/// phi_k = 2^{k-1}(k-1)! / prod_{l<k}(s + 2l - 1) has poles at 1, -1, ..., 3-2k,
/// so matching residues from the deepest pole upward is a triangular solve.
inline CSequence c_residue_oracle(const CoeffTable& table, const BernoulliTable& bern) {
  const unsigned m = table.m;
  if (m < 1) throw std::invalid_argument("c_residue_oracle: m must be >= 1");
  const std::size_t poles = m / 2 + 1;  // 1, -1, ..., 1 - 2 floor(m/2)

  std::vector<Rational> target(poles);
  for (unsigned j = 0; j <= m; ++j) {
    Rational residue = Rational(1 - static_cast<long>(j)) * table.a[j] * bern.b[j] * (m + 1);
    if (j % 2 == 1) {
      if (residue != 0) throw ConsistencyError("c_residue_oracle: odd-index pole with nonzero residue");
      continue;
    }
    target[j / 2] = residue;
  }

  // residue of phi_k at 1 - 2i, for i < k
  auto phi_residue = [](std::size_t k, std::size_t i) {
    Rational r = Rational(Integer(1) << static_cast<mp_bitcnt_t>(k - 1)) * Rational(factorial(k - 1));
    for (std::size_t l = 0; l < k; ++l) {
      if (l == i) continue;
      r /= 2 * (static_cast<long>(l) - static_cast<long>(i));
    }
    return r;
  };

  CSequence out;
  out.m = m;
  out.c.assign(c_length(m), Rational(0));
  out.c[0] = 1;
  for (std::size_t i = poles; i-- > 0;) {
    Rational rhs = target[i];
    for (std::size_t k = i + 2; k <= poles; ++k) rhs -= out.c[k] * phi_residue(k, i);
    Rational pivot = phi_residue(i + 1, i);
    if (pivot == 0) throw ConsistencyError("c_residue_oracle: singular triangular system");
    out.c[i + 1] = rhs / pivot;
  }
  return out;
}

inline CSequence c_residue_oracle(unsigned m) { return c_residue_oracle(coeff_table(m), bernoulli_table(m)); }

// ---------------------------------------------------------------------------
// Generating function
//   (log(1-y))^2 d/dy [ sqrt(1-z) / ((1-y)^{sqrt(1-z)} - 1) ]
// computed purely with truncated power series in y over Q[z].
// ---------------------------------------------------------------------------

/// (log(1-y)/y) through order N, i.e. -sum y^n/(n+1).
inline RationalSeries log_ratio_series(std::size_t order) {
  RationalSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = make_rational(-1, static_cast<long>(n) + 1);
  return s;
}

/// Bivariate series of the generating function through y^order.
///
/// With L = log(1-y), Lambda = L/y and u = sqrt(1-z), the bracketed function is
/// f = sum_j B_j u^j L^{j-1} / j!. The j = 1 term is constant in y and drops
/// out under d/dy, so only even j (polynomial in z) remain. Writing f = g/y,
/// g = B_0/Lambda + sum_{j>=2 even} B_j (1-z)^{j/2} y^j Lambda^{j-1} / j!,
/// and L^2 f' = Lambda^2 (y g' - g).
inline BivariateSeries generating_function_series(std::size_t order, const BernoulliTable& bern) {
  if (bern.n_max < order) throw InsufficientOrder("generating function: Bernoulli table shorter than order");
  const std::size_t n = order;
  const BivariateSeries lambda = lift(log_ratio_series(n));

  BivariateSeries g = lambda.inverse() * bern.b[0];
  const Polynomial one_minus_z({Rational(1), Rational(-1)});
  Polynomial u_power = 1;           // (1-z)^{j/2}
  BivariateSeries lambda_power = lambda;  // Lambda^{j-1}
  Integer fact = 1;                 // j!
  for (std::size_t j = 2; j <= n; j += 2) {
    u_power *= one_minus_z;
    fact *= static_cast<unsigned long>(j - 1);
    fact *= static_cast<unsigned long>(j);
    if (j > 2) lambda_power = lambda_power * lambda * lambda;
    Rational scale = bern.b[j] / Rational(fact);
    BivariateSeries term = (u_power * scale) * lambda_power.truncated(n - j).shifted_up(j);
    g += term;
  }

  BivariateSeries h = g.derivative().shifted_up(1) - g;
  return (lambda * lambda) * h;
}

/// Coefficient table of the generating function: entry (m, k) is the
/// coefficient of y^m z^{k-1}, which should equal c_{m,k}/(m+1).
struct GenfuncTable {
  unsigned m_max = 0;
  unsigned k_max = 0;
  std::size_t order = 0;
  std::vector<Polynomial> rows;  ///< rows[m] is a polynomial in z

  Rational coefficient(unsigned m, unsigned k) const {
    if (m > m_max || k < 1 || k > k_max) throw std::out_of_range("GenfuncTable::coefficient");
    return rows.at(m).coeff(k - 1);
  }

  std::vector<std::vector<Rational>> matrix() const {
    std::vector<std::vector<Rational>> out(m_max + 1, std::vector<Rational>(k_max));
    for (unsigned m = 0; m <= m_max; ++m)
      for (unsigned k = 1; k <= k_max; ++k) out[m][k - 1] = rows[m].coeff(k - 1);
    return out;
  }
};

inline std::size_t default_genfunc_order(unsigned m_max) { return m_max + 5; }

inline GenfuncTable c_genfunc_oracle(unsigned m_max, unsigned k_max, std::size_t order) {
  if (order < static_cast<std::size_t>(m_max) + 2)
    throw InsufficientOrder("c_genfunc_oracle: truncation order " + std::to_string(order) +
                            " < m_max + 2 = " + std::to_string(m_max + 2));
  auto series = generating_function_series(order, bernoulli_table(static_cast<unsigned>(order)));
  GenfuncTable t;
  t.m_max = m_max;
  t.k_max = k_max;
  t.order = order;
  t.rows.assign(series.coefficients().begin(), series.coefficients().begin() + m_max + 1);
  return t;
}

inline GenfuncTable c_genfunc_oracle(unsigned m_max, unsigned k_max) {
  return c_genfunc_oracle(m_max, k_max, default_genfunc_order(m_max));
}

}  // namespace zetacf

#endif  // ZETACF_COEFF_HPP
