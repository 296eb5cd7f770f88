#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args` in `cwd`, stdout captured, stderr discarded.
CliRun zetacf(const std::string& args, const fs::path& cwd = fs::temp_directory_path()) {
  const std::string cmd = "cd '" + cwd.string() + "' && '" + ZETACF_CLI_PATH + "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json report(const CliRun& r) { return Json::parse(r.out)["report"]; }

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("zetacf_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, CoeffRows) {
  const CliRun r = zetacf("coeffs 3 a");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], "zetacf/v1");
  EXPECT_EQ(doc["header"]["precision"], 256);
  EXPECT_EQ(doc["report"]["values"], Json::parse(R"(["1/1","11/6","1/1","1/6"])"));

  EXPECT_EQ(report(zetacf("coeffs 1 c"))["values"], Json::parse(R"(["1/1","2/1"])"));
  EXPECT_EQ(report(zetacf("coeffs 0 a"))["values"], Json::parse(R"(["1/1"])"));
}

TEST(Cli, CsvSequence) {
  const CliRun r = zetacf("coeffs 3 a --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# seed: 20240601\n"), std::string::npos);
  EXPECT_NE(r.out.find("index,numerator,denominator,decimal_approx_30\n0,1,1,1\n1,11,6,1.83333"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(zetacf("coeffs 4 sinh").code, 2);
  EXPECT_EQ(zetacf("verify no-such-claim 3").code, 2);
  EXPECT_EQ(zetacf("coeffs 3 a --precision 10").code, 2);
  EXPECT_EQ(zetacf("").code, 2);
  EXPECT_EQ(zetacf("export cf-g 3 --format csv").code, 2);
  EXPECT_EQ(zetacf("scan zero 3 --rect 0,1,2").code, 2);
}

TEST(Cli, SinhNeedsRadius) {
  const CliRun r = zetacf("coeffs 4 sinh --r-squared 1/4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["values"].size(), 4U);
}

TEST(Cli, VerifyClaimsPass) {
  for (const char* args : {"verify c1-identity 200", "verify positivity 100", "verify lemma1 2", "verify oracle3 12",
                           "verify binomial-cf 8", "verify cf-positivity 10", "verify logconcave-sinh 20"}) {
    const CliRun r = zetacf(args);
    EXPECT_EQ(r.code, 0) << args;
    EXPECT_TRUE(report(r)["pass"].get<bool>()) << args;
  }
}

TEST(Cli, ZeroScanWindingZero) {
  const CliRun r = zetacf("scan zero 3 --rect 0,1,-2,2");
  ASSERT_EQ(r.code, 0);
  const Json rep = report(r);
  ASSERT_EQ(rep["results"].size(), 2U);
  for (const auto& z : rep["results"]) {
    EXPECT_TRUE(z["certified"].get<bool>());
    EXPECT_EQ(z["winding"], 0);
  }
  EXPECT_EQ(rep["results"][0]["numerator"], "s^2 + 6*s + 11");
}

TEST(Cli, WorpitzkyHeaderCarriesBand) {
  const CliRun r = zetacf("scan worpitzky 100 --n-sigma 5 --n-t 5");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["header"]["t_bound"], "2304213475/2147483648");
  EXPECT_EQ(doc["report"]["points"].size(), 25U);

  const CliRun csv = zetacf("scan worpitzky 10 --n-sigma 2 --n-t 2 --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("sigma_num,sigma_den,t_num,t_den,margin_sq_num,margin_sq_den,pass\n"), std::string::npos);
}

TEST(Cli, WorpitzkyOutsideBandFails) {
  // t = +-6 lies outside the band for m = 10 and fails there
  const CliRun r = zetacf("scan worpitzky 10 --t-max 6 --n-sigma 3 --n-t 3");
  EXPECT_EQ(r.code, 0);  // failures outside the band do not fail the run
  const Json rep = report(r);
  EXPECT_FALSE(rep["failing"].empty());
}

TEST(Cli, ExportAndTrace) {
  const CliRun e = zetacf("export cf-g 3");
  ASSERT_EQ(e.code, 0);
  const Json cf = report(e);
  EXPECT_EQ(cf["levels"][0]["numerator"], Json::parse(R"(["-3/1","0/1"])"));
  EXPECT_EQ(zetacf("export pf-f 3").code, 0);

  const CliRun t = zetacf("trace g 6 --s 1/2,1 --format csv");
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("depth,re,im,abs_error_vs_full_depth\n0,"), std::string::npos);
  EXPECT_NE(t.out.find("\n4,"), std::string::npos);
}

TEST(Cli, RerunsAreByteIdentical) {
  for (const char* args : {"verify cf-series 6", "scan worpitzky 30 --n-sigma 4 --n-t 4", "coeffs 20 c --format csv",
                           "scan monotonicity 2..30"}) {
    const CliRun a = zetacf(args), b = zetacf(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, ConfigFileDiscoveryAndPrecedence) {
  const fs::path dir = scratch_dir("config");
  std::ofstream(dir / "zetacf.toml") << "precision = 128\nseed = 99\n";
  const Json h = Json::parse(zetacf("coeffs 2 a", dir).out)["header"];
  EXPECT_EQ(h["precision"], 128);
  EXPECT_EQ(h["seed"], 99);
  const Json h2 = Json::parse(zetacf("coeffs 2 a --precision 300", dir).out)["header"];
  EXPECT_EQ(h2["precision"], 300);
  EXPECT_EQ(h2["seed"], 99);

  std::ofstream(dir / "other.toml") << "seed = 7\n";
  EXPECT_EQ(Json::parse(zetacf("--config other.toml coeffs 2 a", dir).out)["header"]["seed"], 7);
}

TEST(Cli, OutputFile) {
  const fs::path dir = scratch_dir("out");
  ASSERT_EQ(zetacf("coeffs 3 bernoulli --out b.json", dir).code, 0);
  std::ifstream f(dir / "b.json");
  ASSERT_TRUE(f);
  EXPECT_EQ(Json::parse(f)["report"]["values"][1], "-1/2");
}
