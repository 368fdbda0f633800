// Copyright 2026 The qcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcomp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "qcomp/io.hpp"

namespace qcomp {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<double> row(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) v.push_back(cell.empty() ? NAN : std::stod(cell));
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qcomp_cli_test_" + name);
}

TEST(CliPrepareTest, Ghz) {
  const CliResult r = run({"prepare", "--class", "ghz", "--alpha1", "1.5707963"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(r.out);
  const PureState s = read_state(is);
  EXPECT_NEAR(s[0].real(), 0.7071067811865476, 1e-7);
  EXPECT_NEAR(s[7].real(), 0.7071067811865476, 1e-7);
  for (std::size_t k = 1; k < 7; ++k) EXPECT_EQ(std::abs(s[k]), 0.0);

  const CliResult zero = run({"prepare", "--class", "ghz", "--alpha1", "0"});
  std::istringstream iz(zero.out);
  EXPECT_EQ(read_state(iz).amplitudes(), CVector(CVector::Unit(8, 0)));
}

TEST(CliPrepareTest, RandomAndDegrees) {
  const CliResult r = run({"prepare", "--random", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  const PureState s = read_state(is);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  EXPECT_EQ(s.amplitudes(), random_pure_state(7, 3).amplitudes());

  const CliResult deg = run({"prepare", "--class", "ghz", "--alpha1", "90", "--degrees"});
  const CliResult rad = run({"prepare", "--class", "ghz", "--alpha1", "1.5707963267948966"});
  EXPECT_EQ(deg.out, rad.out);
}

TEST(CliPrepareTest, Json) {
  const CliResult r = run({"prepare", "--class", "w", "--alpha1", "1.5707963267948966", "--alpha2_0", "1.5707963267948966",
                     "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["amplitudes"][4][0].get<double>(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(doc["amplitudes"][1][0].get<double>(), 0.5, 1e-15);
}

TEST(CliUsageTest, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"prepare"}).code, 2);
  EXPECT_EQ(run({"prepare", "--class", "bell"}).code, 2);
  EXPECT_EQ(run({"prepare", "--class", "ghz", "--random"}).code, 2);
  EXPECT_EQ(run({"prepare", "--class", "ghz", "--alpha1", "nan"}).code, 2);
  EXPECT_EQ(run({"prepare", "--state", "/nonexistent/state.txt"}).code, 2);
  EXPECT_EQ(run({"interfere", "--class", "ghz", "--phase-points", "4"}).code, 2);
  EXPECT_EQ(run({"interfere", "--class", "ghz", "--mode", "diagonal"}).code, 2);
  EXPECT_EQ(run({"verify", "--family", "ghz", "--sweep", "beta"}).code, 2);
  EXPECT_EQ(run({"verify", "--family", "ghz", "--basis-coeffs", "1,0,0"}).code, 2);
  EXPECT_EQ(run({"figure9"}).code, 2);
  EXPECT_EQ(run({"verify", "--random", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const CliResult bad = run({"prepare", "--class", "bell"});
  EXPECT_NE(bad.err.find("unknown state class"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliInterfereTest, RowCountAndColumns) {
  const CliResult r = run({"interfere", "--class", "ghz", "--alpha1", "1.5707963267948966", "--phase-points", "36"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 37u);
  EXPECT_EQ(ls[0],
            "phi1,phi2,p_0_0,p_0_1,p_0_2,p_0_3,p_1_0,p_1_1,p_1_2,p_1_3,pA_0,pA_1,pbar_0_0,pbar_0_1,pbar_1_0,pbar_1_1");
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const auto v = row(ls[k]);
    ASSERT_EQ(v.size(), 16u);
    lo = std::min(lo, v[12]);
    hi = std::max(hi, v[12]);
  }
  // Full-amplitude oscillation of pbar(0, Phi_0) over [0, 1/2].
  EXPECT_NEAR(lo, 0.0, 1e-12);
  EXPECT_NEAR(hi, 0.5, 1e-12);

  const CliResult ind = run({"interfere", "--class", "ghz", "--mode", "independent", "--phase-points", "16"});
  EXPECT_EQ(lines(ind.out).size(), 257u);
}

TEST(CliInterfereTest, ProductStateFromFile) {
  const auto path = temp_path("product.txt");
  {
    std::ofstream f(path);
    f << "# |+>|00>\n0.70710678118654752 0\n\n0 0\n0 0\n0 0\n0.70710678118654752 0 # A = 1\n0 0\n0 0\n0 0\n";
  }
  const CliResult r = run({"interfere", "--state", path.string(), "--phase-points", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  for (std::size_t k = 1; k < ls.size(); ++k) {
    const auto v = row(ls[k]);
    for (std::size_t c = 12; c < 16; ++c) EXPECT_NEAR(v[c], 0.25, 1e-15);
  }
  // Table bases only exist for named classes.
  EXPECT_EQ(run({"interfere", "--state", path.string(), "--basis", "table"}).code, 2);
  std::filesystem::remove(path);
}

TEST(CliInterfereTest, Json) {
  const CliResult r = run({"interfere", "--class", "ghz", "--alpha1", "1", "--phase-points", "16", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["format"], "qcomp-interferogram-v1");
  EXPECT_EQ(doc["rows"].size(), 16u);
}

TEST(CliVerifyTest, FamilySweepPasses) {
  const CliResult r = run({"verify", "--family", "ghz", "--sweep", "alpha1", "--points", "33"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 34u);
  const auto summary = nlohmann::json::parse(r.err);
  EXPECT_TRUE(summary["pass"].get<bool>());
  EXPECT_LT(summary["max_residual"].get<double>(), 1e-6);
  EXPECT_EQ(summary["n_states"].get<int>(), 33);
}

TEST(CliVerifyTest, RandomStates) {
  const CliResult r = run({"verify", "--random", "--count", "12", "--seed", "100", "--phase-points", "90"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 13u);
  EXPECT_EQ(ls[1].rfind("random seed=100,", 0), 0u);
  EXPECT_EQ(ls[12].rfind("random seed=111,", 0), 0u);
}

TEST(CliVerifyTest, ExtendedBasisReportsSlack) {
  const CliResult r = run({"verify", "--family", "ghz", "--basis-coeffs", "0,0,1,0", "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.err);
  EXPECT_TRUE(summary.contains("min_slack"));
  EXPECT_GE(summary["min_slack"].get<double>(), -1e-8);
  const auto ls = lines(r.out);
  const auto mid = row(ls[3].substr(ls[3].find(',') + 1));  // alpha1 = pi/2
  EXPECT_NEAR(mid.back(), 1.0, 1e-9);
}

TEST(CliVerifyTest, ToleranceViolationExitsOne) {
  // Locked sweeps cannot see the W fringe, so the equality fails loudly.
  const CliResult r = run({"verify", "--family", "w", "--points", "5", "--mode", "locked"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(r.err)["pass"].get<bool>());
  EXPECT_EQ(run({"verify", "--class", "ghz", "--alpha1", "1", "--tolerance", "1e-30"}).code, 1);
}

TEST(CliVerifyTest, OutputFilesAndDeterminism) {
  const auto out = temp_path("verify.csv");
  const std::vector<std::string> args{"verify", "--random", "--count", "5", "--seed", "9", "--output", out.string()};
  ASSERT_EQ(run(args).code, 0);
  std::ifstream f1(out);
  const std::string first((std::istreambuf_iterator<char>(f1)), {});
  ASSERT_EQ(run(args).code, 0);
  std::ifstream f2(out);
  const std::string second((std::istreambuf_iterator<char>(f2)), {});
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, second);
  std::ifstream s(out.string() + ".summary.json");
  EXPECT_TRUE(nlohmann::json::parse(s)["pass"].get<bool>());
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".summary.json");
}

TEST(CliConfigTest, FileValuesAndOverrides) {
  const auto cfg = temp_path("config.ini");
  {
    std::ofstream f(cfg);
    f << "# run settings\nclass = ghz\nalpha1 = 90\ndegrees = true\nphase-points = 16\n";
  }
  const CliResult from_file = run({"interfere", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(lines(from_file.out).size(), 17u);
  const CliResult direct = run({"interfere", "--class", "ghz", "--alpha1", "90", "--degrees", "--phase-points", "16"});
  EXPECT_EQ(from_file.out, direct.out);
  const CliResult overridden = run({"interfere", "--config", cfg.string(), "--phase-points", "20"});
  EXPECT_EQ(lines(overridden.out).size(), 21u);
  std::filesystem::remove(cfg);
}

TEST(CliFigure9Test, Families) {
  const CliResult g = run({"figure9", "--family", "ghz", "--points", "5"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto ls = lines(g.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "V_ABC,S_A");
  const auto start = row(ls[1]);
  const auto quarter = row(ls[3]);
  EXPECT_NEAR(start[0], 0.0, 1e-9);
  EXPECT_NEAR(start[1], 1.0, 1e-9);
  EXPECT_NEAR(quarter[0], 1.0, 1e-6);
  EXPECT_NEAR(quarter[1], 0.0, 1e-9);
  for (const std::string family : {"ghz", "w", "intermediate"}) {
    const CliResult r = run({"figure9", "--family", family, "--points", "9"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const auto v = row(rows[k]);
      EXPECT_NEAR(v[0] * v[0] + v[1] * v[1], 1.0, 1e-6) << family;
    }
  }
}

TEST(StateFileTest, RoundTripAndErrors) {
  const PureState psi = random_pure_state(21, 3);
  std::stringstream ss;
  write_state(ss, psi);
  EXPECT_EQ(read_state(ss).amplitudes(), psi.amplitudes());
  std::istringstream three("1 0\n0 0\n0 0\n");
  EXPECT_THROW(read_state(three), std::runtime_error);
  std::istringstream junk("1 0\nabc\n");
  EXPECT_THROW(read_state(junk), std::runtime_error);
  std::istringstream unnormalized("1 0\n1 0\n");
  EXPECT_THROW(read_state(unnormalized), std::runtime_error);
  std::istringstream extra("1 0 5\n0 0\n");
  EXPECT_THROW(read_state(extra), std::runtime_error);
}

}  // namespace
}  // namespace qcomp
