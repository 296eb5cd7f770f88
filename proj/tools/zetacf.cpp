// zetacf: batch front-end for the coefficient, continued-fraction and
// region-analysis routines. Exit codes: 0 pass, 1 claim failure, 2 usage,
// 3 uncertifiable.

#include <zetacf/serialize.hpp>
#include <zetacf/zetacf.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace zetacf;

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kUncertifiable = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  long precision = 256;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 20240601;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool record_time = false;
  std::string arguments;

  unsigned effective_jobs() const { return jobs ? jobs : std::max(1U, std::thread::hardware_concurrency()); }
  mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(precision); }
};

/// Collects the report, then writes it with the header in one go so output is
/// assembled deterministically.
class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

  void set_json(Json j) { json_ = std::move(j); }
  std::ostringstream& csv() { return csv_; }
  void note(const std::string& key, Json value) { extra_[key] = std::move(value); }

  void flush() const {
    Json header = {{"tool", "zetacf"},
                   {"version", kVersion},
                   {"arguments", cfg_.arguments},
                   {"seed", cfg_.seed},
                   {"precision", cfg_.precision}};
    for (const auto& [k, v] : extra_.items()) header[k] = v;
    if (cfg_.record_time)
      header["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();

    std::ostringstream text;
    if (cfg_.format == "json") {
      Json doc = {{"schema", kSchema}, {"header", header}, {"report", json_}};
      text << doc.dump(2) << '\n';
    } else {
      for (const auto& [k, v] : header.items()) text << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      text << csv_.str();
    }
    if (cfg_.out.empty() || cfg_.out == "-") {
      std::cout << text.str();
    } else {
      std::ofstream f(cfg_.out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file " + cfg_.out);
      f << text.str();
    }
  }

 private:
  const RunConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  Json json_;
  std::ostringstream csv_;
  Json extra_ = Json::object();
};

void progress(const std::string& msg) { std::cerr << "[zetacf] " << msg << '\n'; }

Rational parse_exact(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid rational for ") + what + ": '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("invalid m or m-range '" + s + "' (expected N or A..B)");
  }
}

ComplexValue parse_point(const std::string& s, mpfr_prec_t prec) {
  auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError("invalid point '" + s + "' (expected re[,im])");
  Rational re = parse_exact(parts[0], "Re s");
  Rational im = parts.size() == 2 ? parse_exact(parts[1], "Im s") : Rational(0);
  return {re, im, prec};
}

void write_check(Output& out, const RunConfig& cfg, const CheckResult& r, Json details = nullptr) {
  Json j = to_json(r);
  if (!details.is_null()) j["details"] = std::move(details);
  out.set_json(j);
  auto& csv = out.csv();
  csv << "claim,pass,checks,witness_m,witness_k,relation,lhs,rhs\n";
  csv << r.claim << ',' << (r.pass ? 1 : 0) << ',' << r.checks;
  if (r.witness)
    csv << ',' << r.witness->m << ',' << r.witness->k << ",\"" << r.witness->relation << "\","
        << to_exact_string(r.witness->lhs) << ',' << to_exact_string(r.witness->rhs);
  else
    csv << ",,,,,";
  csv << '\n';
  (void)cfg;
  if (!r.pass && r.witness) {
    std::cerr << "claim '" << r.claim << "' failed at m=" << r.witness->m << ", k=" << r.witness->k << ": "
              << r.witness->relation << " with lhs=" << to_exact_string(r.witness->lhs)
              << " rhs=" << to_exact_string(r.witness->rhs) << '\n';
  }
}

// ---------------------------------------------------------------------------

int run_coeffs(const RunConfig& cfg, unsigned m, const std::string& kind, const std::string& r_squared,
               unsigned n_terms) {
  if (kind == "sinh" && r_squared.empty()) throw UsageError("coeffs sinh requires --r-squared");
  if (kind != "sinh" && !r_squared.empty()) throw UsageError("--r-squared is only valid with kind sinh");
  Output out(cfg);
  std::vector<Rational> values;
  if (kind == "a") {
    CoeffTable t = coeff_table(m);
    values = t.a;
    out.set_json(to_json(t));
  } else if (kind == "c") {
    if (m < 1) throw UsageError("coeffs c requires m >= 1");
    CSequence c = c_direct(m);
    values = c.c;
    out.set_json(to_json(c));
  } else if (kind == "bernoulli") {
    BernoulliTable b = bernoulli_table(m);
    values = b.b;
    out.set_json(to_json(b));
  } else {
    const Rational r2 = parse_exact(r_squared, "--r-squared");
    if (r2 <= 0) throw UsageError("--r-squared must be positive");
    const unsigned n = n_terms ? n_terms : m;
    if (n < 1) throw UsageError("coeffs sinh requires at least one term");
    SinhSeries s = sinh_series(r2, n);
    values = s.d;
    out.set_json(to_json(s));
  }
  write_sequence_csv(out.csv(), values);
  out.flush();
  return kPass;
}

int run_verify(const RunConfig& cfg, const std::string& claim, unsigned m_max) {
  Output out(cfg);
  CheckResult r;
  Json details;
  progress("verify " + claim + " up to " + std::to_string(m_max));
  if (claim == "lemma1") {
    if (m_max < 2) throw UsageError("lemma1 needs m_max >= 2");
    r = check_lemma1(m_max);
  } else if (claim == "newton") {
    r = check_newton(m_max);
  } else if (claim == "a-table") {
    r = check_coeff_tables(m_max);
  } else if (claim == "positivity") {
    r = check_c_positivity(m_max, cfg.effective_jobs());
  } else if (claim == "oracle3") {
    r = check_residue_oracle(m_max, cfg.effective_jobs());
    r.merge(check_genfunc(m_max));
    r.claim = "oracle3";
  } else if (claim == "genfunc") {
    r = check_genfunc(m_max);
  } else if (claim == "binomial-cf") {
    if (m_max < 4) throw UsageError("binomial-cf needs order >= 4");
    auto rep = binomial_cf_check(m_max);
    r = rep.result;
    details = {{"order", rep.order}, {"levels", rep.levels}};
  } else if (claim == "cf-positivity") {
    if (m_max < 2) throw UsageError("cf-positivity needs m_max >= 2");
    auto rep = positivity_truncation_check(m_max);
    r = rep.result;
    r.merge(check_positivity_vs_genfunc(rep));
    details = {{"levels", rep.levels}};
  } else if (claim == "c1-identity") {
    r = check_c1_identity(m_max);
  } else if (claim == "logconcave-sinh") {
    if (m_max < 1) throw UsageError("logconcave-sinh needs at least one term");
    r = CheckResult("logconcave-sinh");
    details = Json::array();
    for (const auto& r2 : default_sinh_radii()) {
      CheckResult one = check_sinh_logconcave(sinh_series(r2, m_max));
      details.push_back({{"r_squared", exact(r2)}, {"pass", one.pass}});
      r.merge(one);
    }
  } else if (claim == "cf-series") {
    const std::vector<Rational> pts = {make_rational(1, 2), make_rational(1, 3), make_rational(3, 4)};
    auto rep = cf_series_check(m_max, pts, 10, cfg.seed, cfg.bits());
    r = rep.exact;
    const long required = static_cast<long>(cfg.precision) - 56;
    r.record(rep.min_agreement_bits >= required,
             {0, 0, "floating agreement bits >= precision - 56", Rational(rep.min_agreement_bits), Rational(required)});
    details = {{"min_agreement_bits", rep.min_agreement_bits}, {"complex_points", rep.floating_points}};
  } else {
    throw UsageError("unknown claim '" + claim + "'");
  }
  write_check(out, cfg, r, details);
  out.flush();
  return r.pass ? kPass : kFail;
}

struct ScanOptions {
  std::string kind;
  std::string m;
  std::string t_max = "auto";
  std::string sigma_min, sigma_max;
  unsigned n_sigma = 41, n_t = 41;
  std::string rect;
  std::string form = "both";
  std::vector<std::string> points;
  std::vector<unsigned> m_list;
  bool plot = false;
};

int scan_worpitzky(const RunConfig& cfg, const ScanOptions& o) {
  const auto [m, m_hi] = parse_range(o.m);
  if (m != m_hi) throw UsageError("scan worpitzky takes a single m");
  if (m < 3) throw UsageError("scan worpitzky needs m >= 3");
  RegionGrid grid = default_grid(m);
  grid.n_sigma = o.n_sigma;
  grid.n_t = o.n_t;
  grid.sigma_min = o.sigma_min.empty() ? make_rational(1, o.n_sigma + 1) : parse_exact(o.sigma_min, "--sigma-min");
  grid.sigma_max = o.sigma_max.empty() ? make_rational(o.n_sigma, o.n_sigma + 1) : parse_exact(o.sigma_max, "--sigma-max");
  const Rational t = o.t_max == "auto" ? prop1_t_bound(m) : parse_exact(o.t_max, "--t-max");
  grid.t_min = -t;
  grid.t_max = t;
  try {
    grid.validate_strip();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  progress("worpitzky scan m=" + std::to_string(m) + ", " + std::to_string(grid.n_sigma * grid.n_t) + " points");
  const WorpitzkyReport rep = prop1_scan(m, grid, cfg.effective_jobs());
  Output out(cfg);
  out.note("t_bound", exact(t));
  out.note("t_bound_is_auto", o.t_max == "auto");
  out.set_json(to_json(rep));
  if (o.plot)
    write_margin_plot(out.csv(), rep);
  else
    write_scan_csv(out.csv(), rep);
  out.flush();
  return rep.band_pass ? kPass : kFail;
}

int scan_zero(const RunConfig& cfg, const ScanOptions& o) {
  const auto [m, m_hi] = parse_range(o.m);
  if (m != m_hi) throw UsageError("scan zero takes a single m");
  if (m < 1) throw UsageError("scan zero needs m >= 1");
  Rectangle rect;
  if (o.rect.empty()) {
    const Rational t = prop1_t_bound(m);
    rect = {0, 1, -t, t};
  } else {
    auto parts = split(o.rect, ',');
    if (parts.size() != 4) throw UsageError("--rect expects sigma_min,sigma_max,t_min,t_max");
    rect = {parse_exact(parts[0], "--rect"), parse_exact(parts[1], "--rect"), parse_exact(parts[2], "--rect"),
            parse_exact(parts[3], "--rect")};
    if (rect.sigma_min >= rect.sigma_max || rect.t_min >= rect.t_max) throw UsageError("--rect is degenerate");
  }
  std::vector<std::pair<std::string, PartialFraction>> forms;
  if (o.form == "g" || o.form == "both") forms.emplace_back("G", build_g(m));
  if (o.form == "f" || o.form == "both") forms.emplace_back("F", build_f(m));

  Output out(cfg);
  Json results = Json::array();
  auto& csv = out.csv();
  csv << "form,sigma_min,sigma_max,t_min,t_max,certified,winding,subdivisions,segments\n";
  bool all_zero = true, all_certified = true;
  for (const auto& [name, pf] : forms) {
    const Polynomial p = numerator_poly(pf);
    progress("zero scan " + name + "_" + std::to_string(m) + " numerator, degree " + std::to_string(p.degree()));
    const ZeroScanResult z = zero_scan(p, rect, cfg.bits());
    Json j = to_json(z);
    j["form"] = name;
    j["numerator"] = p.to_string();
    results.push_back(j);
    csv << name << ',' << to_exact_string(rect.sigma_min) << ',' << to_exact_string(rect.sigma_max) << ','
        << to_exact_string(rect.t_min) << ',' << to_exact_string(rect.t_max) << ',' << (z.certified ? 1 : 0) << ','
        << (z.certified ? std::to_string(z.winding) : "") << ',' << z.subdivisions << ',' << z.segments << '\n';
    all_certified = all_certified && z.certified;
    all_zero = all_zero && z.certified && z.winding == 0;
  }
  out.set_json({{"schema", kSchema}, {"kind", "zero"}, {"m", m}, {"results", results}});
  out.flush();
  if (!all_certified) return kUncertifiable;
  return all_zero ? kPass : kFail;
}

int scan_convergence(const RunConfig& cfg, const ScanOptions& o) {
  std::vector<ComplexValue> pts;
  const std::vector<std::string> defaults = {"2,0", "1/2,1413/100"};
  for (const auto& s : o.points.empty() ? defaults : o.points) pts.push_back(parse_point(s, cfg.bits()));
  for (const auto& s : pts)
    if (s.real().sign() <= 0) throw UsageError("convergence probe needs Re s > 0");
  const std::vector<unsigned> ms = o.m_list.empty() ? std::vector<unsigned>{4, 8, 16, 32, 64} : o.m_list;
  progress("convergence probe at " + std::to_string(pts.size()) + " points");
  const auto rows = convergence_probe(pts, ms, cfg.bits());
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].m > rows[i - 1].m && !(rows[i].error < rows[i - 1].error)) decreasing = false;
  Output out(cfg);
  Json j = to_json(rows);
  j["strictly_decreasing"] = decreasing;
  out.set_json(j);
  write_convergence_csv(out.csv(), rows);
  out.flush();
  return decreasing ? kPass : kFail;
}

int scan_monotonicity(const RunConfig& cfg, const ScanOptions& o) {
  const auto [lo, hi] = parse_range(o.m);
  if (lo < 2 || hi < lo) throw UsageError("monotonicity range must satisfy 2 <= from <= to");
  progress("monotonicity search m=" + std::to_string(lo) + ".." + std::to_string(hi));
  const MonotonicityReport rep = c_monotonicity_search(lo, hi, cfg.effective_jobs());
  Output out(cfg);
  out.set_json(to_json(rep));
  auto& csv = out.csv();
  csv << "m,c_ratio_decreasing,weighted_first_violation_k\n";
  for (std::size_t i = 0; i < rep.plain.size(); ++i)
    csv << rep.plain[i].m << ',' << (rep.plain[i].violation ? 0 : 1) << ','
        << (rep.weighted[i].violation ? std::to_string(*rep.weighted[i].violation) : "") << '\n';
  out.flush();
  if (!rep.smallest_weighted_violation)
    progress("no m in range with k*c_k/c_{k-1} increasing somewhere");
  return kPass;
}

int run_export(const RunConfig& cfg, const std::string& what, unsigned m) {
  Output out(cfg);
  if (m < 1) throw UsageError("export needs m >= 1");
  if (cfg.format != "json") throw UsageError("export writes JSON only");
  Json j;
  if (what == "pf-g") {
    j = to_json(build_g(m));
  } else if (what == "pf-f") {
    j = to_json(build_f(m));
  } else if (what == "expansion-g") {
    j = to_json(g_expansion(m));
  } else if (what == "expansion-f") {
    j = to_json(f_expansion(m));
  } else if (what == "cf-g" || what == "cf-f") {
    const FactorialExpansion e = what == "cf-g" ? g_expansion(m) : f_expansion(m);
    if (e.size() < 2) throw UsageError("expansion too short for a continued fraction at this m");
    j = to_json(euler_cf(e));
  } else {
    throw UsageError("unknown export object '" + what + "'");
  }
  out.set_json(j);
  out.flush();
  return kPass;
}

int run_trace(const RunConfig& cfg, const std::string& form, unsigned m, const std::string& point, long depth) {
  if (m < 1) throw UsageError("trace needs m >= 1");
  const FactorialExpansion e = form == "g" ? g_expansion(m) : f_expansion(m);
  if (e.size() < 2) throw UsageError("expansion too short for a continued fraction at this m");
  const ContinuedFraction cf = euler_cf(e);
  const std::size_t d = depth < 0 ? cf.depth() - 1 : static_cast<std::size_t>(depth);
  if (d >= cf.depth()) throw UsageError("--depth must be below " + std::to_string(cf.depth()));
  const ComplexValue s = parse_point(point, cfg.bits());
  const CfEvaluation<ComplexValue> ev = eval_cf(cf, s, d);
  Output out(cfg);
  Json trace = Json::array();
  for (std::size_t n = 0; n < ev.trace.size(); ++n) {
    const auto& c = ev.trace[n];
    trace.push_back({{"depth", n}, {"q_is_zero", c.q.is_zero()}, {"value", c.q.is_zero() ? Json(nullptr) : to_json(c.p / c.q, 30)}});
  }
  out.set_json({{"schema", kSchema}, {"kind", "trace"}, {"form", form}, {"m", m}, {"value", to_json(ev.value)}, {"trace", trace}});
  write_trace_csv(out.csv(), ev);
  out.flush();
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficient tables, continued fractions and region checks for rational zeta approximants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "zetacf.toml", "TOML file with default flag values (flags take precedence)");

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(53L, 1L << 20));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for sampled test points");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  app.add_flag("--record-time", cfg.record_time, "add wall time to the header (output is then not reproducible)");

  std::function<int()> action;

  // coeffs
  unsigned c_m = 0, c_n = 0;
  std::string c_kind, c_r2;
  auto* coeffs = app.add_subcommand("coeffs", "exact coefficient tables");
  coeffs->add_option("m", c_m, "row index (a, c), n_max (bernoulli) or term count (sinh)")->required();
  coeffs->add_option("kind", c_kind, "table kind")->required()->check(CLI::IsMember({"a", "c", "bernoulli", "sinh"}));
  coeffs->add_option("--r-squared", c_r2, "r^2 for the sinh family, as num/den");
  coeffs->add_option("--n", c_n, "number of sinh terms (default m)");
  coeffs->callback([&] { action = [&] { return run_coeffs(cfg, c_m, c_kind, c_r2, c_n); }; });

  // verify
  std::string v_claim;
  unsigned v_m = 0;
  auto* verify = app.add_subcommand("verify", "exact claim sweeps");
  verify->add_option("claim", v_claim, "claim name")
      ->required()
      ->check(CLI::IsMember({"lemma1", "newton", "a-table", "positivity", "oracle3", "genfunc", "binomial-cf",
                             "cf-positivity", "c1-identity", "logconcave-sinh", "cf-series"}));
  verify->add_option("m_max", v_m, "upper bound (series order for binomial-cf, terms for logconcave-sinh)")->required();
  verify->callback([&] { action = [&] { return run_verify(cfg, v_claim, v_m); }; });

  // scan
  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "region scans and experiments");
  scan->add_option("kind", so.kind, "scan kind")
      ->required()
      ->check(CLI::IsMember({"worpitzky", "zero", "convergence", "monotonicity"}));
  scan->add_option("m", so.m, "m, or A..B for monotonicity");
  scan->add_option("--t-max", so.t_max, "worpitzky: |t| bound, 'auto' = enclosure of sqrt(log m)/2");
  scan->add_option("--sigma-min", so.sigma_min, "worpitzky: smallest sigma");
  scan->add_option("--sigma-max", so.sigma_max, "worpitzky: largest sigma");
  scan->add_option("--n-sigma", so.n_sigma, "worpitzky: sigma samples")->check(CLI::PositiveNumber);
  scan->add_option("--n-t", so.n_t, "worpitzky: t samples")->check(CLI::PositiveNumber);
  scan->add_option("--rect", so.rect, "zero: sigma_min,sigma_max,t_min,t_max");
  scan->add_option("--form", so.form, "zero: numerator to scan")->check(CLI::IsMember({"g", "f", "both"}));
  scan->add_option("--s", so.points, "convergence: point re[,im] (repeatable)");
  scan->add_option("--m-list", so.m_list, "convergence: m values")->delimiter(',');
  scan->add_flag("--plot", so.plot, "worpitzky: emit gnuplot heat-map data instead of the scan CSV");
  scan->callback([&] {
    action = [&] {
      if (so.kind != "convergence" && so.m.empty()) throw UsageError("scan " + so.kind + " requires m");
      if (so.kind == "worpitzky") return scan_worpitzky(cfg, so);
      if (so.kind == "zero") return scan_zero(cfg, so);
      if (so.kind == "convergence") return scan_convergence(cfg, so);
      return scan_monotonicity(cfg, so);
    };
  });

  // export
  std::string e_what;
  unsigned e_m = 0;
  auto* exp = app.add_subcommand("export", "exact partial fractions, expansions and continued fractions");
  exp->add_option("object", e_what, "object")
      ->required()
      ->check(CLI::IsMember({"pf-g", "pf-f", "expansion-g", "expansion-f", "cf-g", "cf-f"}));
  exp->add_option("m", e_m, "m")->required();
  exp->callback([&] { action = [&] { return run_export(cfg, e_what, e_m); }; });

  // trace
  std::string t_form, t_point = "1/2,1";
  unsigned t_m = 0;
  long t_depth = -1;
  auto* tr = app.add_subcommand("trace", "convergent trace of a continued fraction at a complex point");
  tr->add_option("form", t_form, "g or f")->required()->check(CLI::IsMember({"g", "f"}));
  tr->add_option("m", t_m, "m")->required();
  tr->add_option("--s", t_point, "point re[,im] as rationals");
  tr->add_option("--depth", t_depth, "deepest level index (default full)");
  tr->callback([&] { action = [&] { return run_trace(cfg, t_form, t_m, t_point, t_depth); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (int i = 1; i < argc; ++i) {
    if (i > 1) cfg.arguments += ' ';
    cfg.arguments += argv[i];
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
