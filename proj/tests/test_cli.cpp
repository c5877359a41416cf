#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "format.hpp"
#include "univalent/mappings.hpp"

namespace univalent::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "univalent");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json payload(const Outcome& o) {
  const auto j = nlohmann::json::parse(o.out);
  return j.at("payload");
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Coeffs, CsvForHarmonicKoebe) {
  const auto o = invoke({"coeffs", "--map", "k0", "--nmax", "3", "--format", "csv"});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_EQ(o.out, "n,a_n,b_n\n1,1,0\n2,5/2,1/2\n3,14/3,5/3\n");
}

TEST(Coeffs, EnvelopeAndRoundTrip) {
  const auto o = invoke({"coeffs", "--map", "ka", "--param", "0.25", "--nmax", "30"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("command"), "coeffs");
  EXPECT_EQ(j.at("mode"), "exact");
  EXPECT_TRUE(j.contains("toolVersion"));
  EXPECT_EQ(j.at("payload").at("param"), "1/4");
  const auto spec = catalog(MapName::ka, Rational(1, 4));
  for (const auto& row : j.at("payload").at("rows")) {
    const int n = row.at("n");
    EXPECT_EQ(parse_rational(row.at("a").get<std::string>()), spec.a_coef(n));
    EXPECT_EQ(parse_rational(row.at("b").get<std::string>()), spec.b_coef(n));
  }
}

TEST(Coeffs, SaAtZeroAndKcAtOne) {
  const auto sa = invoke({"coeffs", "--map", "sa", "--param", "0", "--nmax", "5", "--format", "csv"});
  const auto s0 = invoke({"coeffs", "--map", "s0", "--nmax", "5", "--format", "csv"});
  EXPECT_EQ(sa.out, s0.out);
  const auto kc = invoke({"coeffs", "--map", "kc", "--param", "1", "--nmax", "20", "--format", "csv"});
  const auto k0 = invoke({"coeffs", "--map", "k0", "--nmax", "20", "--format", "csv"});
  EXPECT_EQ(kc.out, k0.out);
}

TEST(Coeffs, UsageErrors) {
  EXPECT_EQ(invoke({"coeffs", "--map", "zz"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--map", "ka"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--map", "ka", "--param", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--map", "k0", "--param", "1/2"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--map", "k0", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs", "--map", "k0", "--mode", "fast"}).code, kUsageError);
  EXPECT_EQ(invoke({"coeffs"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
}

TEST(Verify, ExitCodes) {
  const auto css0 = invoke({"verify", "--map", "k0", "--conjecture", "css0", "--nmax", "50"});
  ASSERT_EQ(css0.code, kPass) << css0.err;
  for (const auto& row : payload(css0).at("report").at("rows")) {
    EXPECT_EQ(row.at("aSlack"), "0");
    EXPECT_EQ(row.at("bSlack"), "0");
  }
  const auto strict = invoke(
      {"verify", "--map", "ka", "--param", "1/2", "--conjecture", "sh-strict", "--nmax", "50"});
  ASSERT_EQ(strict.code, kPass) << strict.err;
  for (const auto& row : payload(strict).at("report").at("rows")) {
    EXPECT_GT(parse_rational(row.at("aSlack").get<std::string>()), 0);
  }
  EXPECT_EQ(invoke({"verify", "--map", "k0", "--conjecture", "muir"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--map", "k0", "--conjecture", "web"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--map", "k0", "--conjecture", "improved", "--bound-a=-1/2"}).code,
            kVerificationFailed);
  EXPECT_EQ(invoke({"verify", "--map", "sc", "--param", "3", "--conjecture", "muir",
                    "--scan-jacobian"})
                .code,
            kPass);
}

TEST(Verify, ParametricLabel) {
  const auto o = invoke({"verify", "--map", "s0", "--conjecture", "improved", "--bound-a", "1/3",
                         "--nmax", "5"});
  EXPECT_EQ(payload(o).at("report").at("label"), "parametric");
}

TEST(Shear, KoebeAndHalfPlane) {
  const auto koebe = invoke({"shear", "--target", "koebe", "--mobius", "0,+1", "--phi", "0",
                             "--nmax", "10"});
  ASSERT_EQ(koebe.code, kPass) << koebe.err;
  const auto k0 = catalog(MapName::k0);
  auto p = payload(koebe);
  EXPECT_EQ(p.at("residual"), "0");
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(parse_rational(p.at("h")[n].get<std::string>()), k0.a_coef(n));
    EXPECT_EQ(parse_rational(p.at("g")[n].get<std::string>()), k0.b_coef(n));
  }
  const auto half = invoke({"shear", "--target", "halfplane", "--mobius", "0,-1", "--phi", "pi/2",
                            "--nmax", "10"});
  ASSERT_EQ(half.code, kPass) << half.err;
  const auto s0 = catalog(MapName::s0);
  p = payload(half);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(parse_rational(p.at("h")[n].get<std::string>()), s0.a_coef(n));
    EXPECT_EQ(parse_rational(p.at("g")[n].get<std::string>()), s0.b_coef(n));
  }
}

TEST(Shear, ConstantZeroDilatationReturnsTarget) {
  const auto o = invoke({"shear", "--target", "koebe", "--mobius", "0,0", "--nmax", "6"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const auto p = payload(o);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(parse_rational(p.at("h")[n].get<std::string>()), Rational(n));
    EXPECT_EQ(p.at("g")[n], "0");
  }
}

TEST(Shear, SeriesFile) {
  const auto path = std::filesystem::temp_directory_path() / "univalent_test_series.txt";
  {
    std::ofstream f(path);
    f << "# z + z^2/2\n0 1\n1/2 0.25\n";
  }
  const auto o = invoke({"shear", "--target", "series-file", "--series-file", path.string(),
                         "--mobius", "0,0", "--nmax", "2"});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_EQ(payload(o).at("h"), nlohmann::json::array({"0", "1", "1/2"}));
  {
    std::ofstream f(path);
    f << "0 1 x\n";
  }
  EXPECT_EQ(invoke({"shear", "--target", "series-file", "--series-file", path.string(),
                    "--mobius", "0,1"})
                .code,
            kUsageError);
  std::filesystem::remove(path);
}

TEST(Shear, UsageErrors) {
  EXPECT_EQ(invoke({"shear", "--target", "koebe", "--mobius", "1,1"}).code, kUsageError);
  EXPECT_EQ(invoke({"shear", "--target", "koebe", "--mobius", "0,2"}).code, kUsageError);
  EXPECT_EQ(invoke({"shear", "--target", "koebe", "--mobius", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"shear", "--target", "koebe", "--mobius", "0,1", "--phi", "0.3"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"shear", "--target", "koebe", "--mobius", "0,1", "--phi", "0.3", "--mode",
                    "float"})
                .code,
            kPass);
  EXPECT_EQ(invoke({"shear", "--target", "series-file", "--mobius", "0,1"}).code, kUsageError);
}

TEST(Grid, SingleRing) {
  const auto o = invoke({"grid", "--map", "k0", "--radii", "1", "--angles", "1", "--rmax", "0.5"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "x,y,u,v,jacobian");
  const auto s = eval_map(catalog(MapName::k0), Complex(0.5, 0.0));
  EXPECT_EQ(rows[1], "0.5,0," + decimal(s.f.real()) + "," + decimal(s.f.imag()) + "," +
                         decimal(s.jacobian));
}

TEST(Grid, OriginRowAndShape) {
  const auto o = invoke({"grid", "--map", "ka", "--param", "1/2", "--radii", "3", "--angles", "5"});
  ASSERT_EQ(o.code, kPass) << o.err;
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 1u + 3 * 5);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(rows[k], "0,0,0,0,0.75");
  for (const auto& row : rows) {
    EXPECT_EQ(row.find('e'), std::string::npos) << row;
    EXPECT_EQ(row.find('\r'), std::string::npos);
  }
}

TEST(Grid, FileOutputAndIoError) {
  const auto path = std::filesystem::temp_directory_path() / "univalent_test_grid.csv";
  const auto o = invoke({"grid", "--map", "s0", "--radii", "4", "--angles", "8", "--out",
                         path.string()});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_EQ(payload(o).at("rows"), 32);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), invoke({"grid", "--map", "s0", "--radii", "4", "--angles", "8"}).out);
  std::filesystem::remove(path);

  EXPECT_EQ(invoke({"grid", "--map", "k0", "--out", "/nonexistent-dir/grid.csv"}).code, kIoError);
  EXPECT_EQ(invoke({"grid", "--map", "k0", "--mode", "exact"}).code, kUsageError);
  EXPECT_EQ(invoke({"grid", "--map", "k0", "--rmax", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"grid", "--map", "k0", "--radii", "0"}).code, kUsageError);
}

TEST(Grid, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> args{"grid", "--map", "sc", "--param", "1/3", "--radii", "7",
                                      "--angles", "90"};
  auto one = args;
  one.insert(one.begin(), {"--threads", "1"});
  auto eight = args;
  eight.insert(eight.begin(), {"--threads", "8"});
  EXPECT_EQ(invoke(one).out, invoke(eight).out);
}

TEST(Scan, GapsOnThreePointGrid) {
  const auto o = invoke({"scan", "--sharpness", "--n", "3", "--a-steps", "3", "--format", "csv"});
  ASSERT_EQ(o.code, kPass) << o.err;
  EXPECT_EQ(o.out, "a,abs_a_n,bound,gap\n-1/2,23/6,19/3,5/2\n0,14/3,19/3,5/3\n1/2,11/2,19/3,5/6\n");
}

TEST(Scan, ZeroRowMatchesFormula) {
  for (int n : {2, 7, 40}) {
    const auto o = invoke({"scan", "--sharpness", "--n", std::to_string(n), "--a-steps", "5"});
    ASSERT_EQ(o.code, kPass) << o.err;
    const auto rows = payload(o).at("rows");
    ASSERT_EQ(rows[2].at("a"), "0");
    EXPECT_EQ(parse_rational(rows[2].at("gap").get<std::string>()),
              Rational((2 * n - 1) * (n - 1), 6));
  }
  EXPECT_EQ(invoke({"scan", "--sharpness", "--n", "1", "--a-steps", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--sharpness", "--n", "3", "--a-steps", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--n", "3", "--a-steps", "3"}).code, kUsageError);
}

TEST(Help, ExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, kPass);
  EXPECT_EQ(invoke({"--version"}).code, kPass);
}

}  // namespace
}  // namespace univalent::cli
