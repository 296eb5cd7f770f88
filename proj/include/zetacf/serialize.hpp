#ifndef ZETACF_SERIALIZE_HPP
#define ZETACF_SERIALIZE_HPP

#include <zetacf/coeff.hpp>
#include <zetacf/continued_fraction.hpp>
#include <zetacf/experiments.hpp>
#include <zetacf/partial_fraction.hpp>
#include <zetacf/sinh_series.hpp>
#include <zetacf/worpitzky.hpp>
#include <zetacf/zero_scan.hpp>

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace zetacf {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "zetacf/v1";

inline Json exact(const Rational& q) { return to_exact_string(q); }

inline Json exact(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(exact(q));
  return a;
}

inline Json exact(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& q : p.coefficients()) a.push_back(exact(q));
  return a;
}

inline Json to_json(const ComplexValue& z, int digits = 40) {
  return {{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}};
}

inline Json sequence_json(const std::string& kind, const std::vector<Rational>& values) {
  return {{"schema", kSchema}, {"kind", kind}, {"values", exact(values)}};
}

inline Json to_json(const CoeffTable& t) {
  Json j = sequence_json("a", t.a);
  j["m"] = t.m;
  return j;
}

inline Json to_json(const CSequence& c) {
  Json j = sequence_json("c", c.c);
  j["m"] = c.m;
  return j;
}

inline Json to_json(const BernoulliTable& b) {
  Json j = sequence_json("bernoulli", b.b);
  j["n_max"] = b.n_max;
  return j;
}

inline Json to_json(const SinhSeries& s) {
  Json j = sequence_json("sinh", s.d);
  j["r_squared"] = exact(s.r_squared);
  j["denominator_terms"] = s.denominator_terms;
  return j;
}

/// index, numerator, denominator, decimal (approximate, 30 significant digits)
inline void write_sequence_csv(std::ostream& os, const std::vector<Rational>& values) {
  os << "index,numerator,denominator,decimal_approx_30\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    os << i << ',' << values[i].get_num().get_str() << ',' << values[i].get_den().get_str() << ','
       << to_decimal(values[i], 30) << '\n';
}

inline Json to_json(const PartialFraction& pf) {
  Json terms = Json::array();
  for (const auto& t : pf.terms) terms.push_back({{"pole", t.pole}, {"residue", exact(t.residue)}});
  const CollapsedForm c = collapse(pf);
  return {{"schema", kSchema},
          {"kind", "partial_fraction"},
          {"terms", terms},
          {"collapsed", {{"scale", exact(c.scale)}, {"numerator", exact(c.numerator)},
                         {"denominator", exact(c.denominator)}}}};
}

inline Json to_json(const FactorialExpansion& e) {
  Json terms = Json::array();
  for (std::size_t j = 0; j < e.size(); ++j)
    terms.push_back({{"j", j}, {"base", exact(e.base[j])}, {"weight", exact(e.weight[j])},
                     {"term", exact(e.terms[j])}, {"shift", j == 0 ? Json(nullptr) : Json(e.shift[j])}});
  return {{"schema", kSchema}, {"kind", std::string("expansion_") + to_string(e.kind)}, {"m", e.m}, {"terms", terms}};
}

inline Json to_json(const ContinuedFraction& cf) {
  Json levels = Json::array();
  for (std::size_t k = 0; k < cf.levels.size(); ++k) {
    const auto& l = cf.levels[k];
    levels.push_back({{"level", k + 1},
                      {"numerator", {exact(l.numerator.c0), exact(l.numerator.c1)}},
                      {"denominator", {exact(l.denominator.c0), exact(l.denominator.c1)}}});
  }
  return {{"schema", kSchema}, {"kind", std::string("cf_") + to_string(cf.kind)}, {"m", cf.m}, {"levels", levels}};
}

/// depth, re, im, abs_error_vs_full_depth; row n is the convergent p_n/q_n.
inline void write_trace_csv(std::ostream& os, const CfEvaluation<ComplexValue>& ev, int digits = 30) {
  os << "depth,re,im,abs_error_vs_full_depth\n";
  for (std::size_t n = 0; n < ev.trace.size(); ++n) {
    const auto& c = ev.trace[n];
    if (c.q.is_zero()) {
      os << n << ",nan,nan,nan\n";
      continue;
    }
    const ComplexValue v = c.p / c.q;
    os << n << ',' << v.real().to_string(digits) << ',' << v.imag().to_string(digits) << ','
       << (v - ev.value).abs().to_string(6) << '\n';
  }
}

inline Json to_json(const Witness& w) {
  return {{"m", w.m}, {"k", w.k}, {"relation", w.relation}, {"lhs", exact(w.lhs)}, {"rhs", exact(w.rhs)}};
}

inline Json to_json(const CheckResult& r) {
  Json j = {{"schema", kSchema}, {"claim", r.claim}, {"pass", r.pass}, {"checks", r.checks}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const RegionGrid& g) {
  return {{"sigma_min", exact(g.sigma_min)}, {"sigma_max", exact(g.sigma_max)}, {"t_min", exact(g.t_min)},
          {"t_max", exact(g.t_max)},         {"n_sigma", g.n_sigma},            {"n_t", g.n_t}};
}

inline Json to_json(const WorpitzkyReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points)
    points.push_back({{"sigma", exact(p.sigma)},
                      {"t", exact(p.t)},
                      {"argmin_k", p.argmin_k},
                      {"margin_sq", exact(p.margin_sq)},
                      {"pass", p.pass}});
  Json failing = Json::array();
  for (auto i : r.failing) failing.push_back(i);
  return {{"schema", kSchema},
          {"kind", "worpitzky"},
          {"m", r.m},
          {"grid", to_json(r.grid)},
          {"t_band", exact(r.t_band)},
          {"band_pass", r.band_pass},
          {"global_min_margin_sq", exact(r.global_min_margin_sq)},
          {"global_min_margin_sq_approx", to_decimal(r.global_min_margin_sq, 12)},
          {"empirical_t_bound", exact(r.empirical_t_bound)},
          {"empirical_resolution", exact(r.empirical_resolution)},
          {"failing", failing},
          {"points", points}};
}

/// sigma_num, sigma_den, t_num, t_den, margin_sq_num, margin_sq_den, pass
inline void write_scan_csv(std::ostream& os, const WorpitzkyReport& r) {
  os << "sigma_num,sigma_den,t_num,t_den,margin_sq_num,margin_sq_den,pass\n";
  for (const auto& p : r.points)
    os << p.sigma.get_num().get_str() << ',' << p.sigma.get_den().get_str() << ',' << p.t.get_num().get_str() << ','
       << p.t.get_den().get_str() << ',' << p.margin_sq.get_num().get_str() << ',' << p.margin_sq.get_den().get_str()
       << ',' << (p.pass ? 1 : 0) << '\n';
}

/// Gnuplot-ready heat map: "sigma t margin_sq", blank line between sigma rows.
inline void write_margin_plot(std::ostream& os, const WorpitzkyReport& r) {
  os << "# sigma t margin_sq (approximate)\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    if (i > 0 && p.sigma != r.points[i - 1].sigma) os << '\n';
    os << to_decimal(p.sigma, 12) << ' ' << to_decimal(p.t, 12) << ' ' << to_decimal(p.margin_sq, 12) << '\n';
  }
}

inline Json to_json(const ZeroScanResult& z) {
  return {{"schema", kSchema},
          {"kind", "zero"},
          {"rect", {exact(z.rect.sigma_min), exact(z.rect.sigma_max), exact(z.rect.t_min), exact(z.rect.t_max)}},
          {"certified", z.certified},
          {"winding", z.certified ? Json(z.winding) : Json(nullptr)},
          {"boundary_min_lower_bound", to_decimal(z.boundary_min, 12)},
          {"subdivisions", z.subdivisions},
          {"segments", z.segments},
          {"uncertified_at", z.certified ? Json(nullptr) : Json({exact(z.witness.re), exact(z.witness.im)})}};
}

inline Json to_json(const MonotonicityFinding& f) {
  Json j = {{"m", f.m}, {"sequence", f.weighted ? "k*c_k/c_{k-1}" : "c_k/c_{k-1}"}};
  if (f.violation) {
    j["first_violation_k"] = *f.violation;
    j["ratio_k_minus_1"] = exact(f.previous);
    j["ratio_k"] = exact(f.current);
  } else {
    j["first_violation_k"] = nullptr;
  }
  return j;
}

inline Json to_json(const MonotonicityReport& r) {
  Json plain = Json::array(), weighted = Json::array();
  for (const auto& f : r.plain) plain.push_back({{"m", f.m}, {"decreasing", !f.violation.has_value()}});
  for (const auto& f : r.weighted)
    if (f.violation) weighted.push_back(to_json(f));
  Json j = {{"schema", kSchema},
            {"kind", "monotonicity"},
            {"m_from", r.m_from},
            {"m_to", r.m_to},
            {"plain_always_decreasing", r.plain_always_decreasing},
            {"smallest_weighted_violation_m",
             r.smallest_weighted_violation ? Json(*r.smallest_weighted_violation) : Json(nullptr)}};
  if (r.smallest_weighted_violation) j["smallest_weighted_violation"] = to_json(r.weighted[*r.smallest_weighted_violation - r.m_from]);
  j["weighted_violations"] = weighted;
  j["plain"] = plain;
  return j;
}

inline Json to_json(const std::vector<ConvergenceRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"s", to_json(r.s, 20)},
                 {"m", r.m},
                 {"value", to_json(r.value, 30)},
                 {"abs_error", r.error.to_string(12)},
                 {"agreement_bits_128", r.agreement_bits}});
  return {{"schema", kSchema}, {"kind", "convergence"}, {"rows", a}};
}

/// s_re, s_im, m, abs_error: one curve per s, gnuplot and CSV compatible.
inline void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "s_re,s_im,m,abs_error,agreement_bits_128\n";
  for (const auto& r : rows)
    os << r.s.real().to_string(20) << ',' << r.s.imag().to_string(20) << ',' << r.m << ',' << r.error.to_string(12)
       << ',' << r.agreement_bits << '\n';
}

}  // namespace zetacf

#endif  // ZETACF_SERIALIZE_HPP
