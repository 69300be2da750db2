#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rmspec/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "rmspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rmspec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Cli, SpectrumJson) {
  const auto r = run({"spectrum", "--v0", "1", "--mu-ln2-half"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = json::parse(r.out);
  for (const char* key : {"params", "derived", "discrete", "continuum_info", "diagnostics"}) {
    EXPECT_TRUE(d.contains(key)) << key;
  }
  EXPECT_EQ(d["derived"]["n_b"], 1);
  EXPECT_NEAR(d["discrete"][0]["eps"].get<double>(), (2.0 * std::sqrt(22.0) - 5.0) / 9.0, 1e-15);
  EXPECT_NEAR(d["derived"]["v_minus"].get<double>(), 0.5, 1e-15);
  EXPECT_FALSE(d["continuum_info"]["v_minus_in_spectrum"].get<bool>());
  EXPECT_EQ(d["diagnostics"]["fd_count_below_v_minus"], 1);
  EXPECT_LT(d["diagnostics"]["norm_deviation"][0].get<double>(), 1e-9);
}

TEST(Cli, SpectrumExampleTwoHasThresholdState) {
  const auto r = run({"spectrum", "--v0", "0.6666666666666666", "--mu-ln2-half"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = json::parse(r.out);
  EXPECT_EQ(d["derived"]["n_b"], 0);
  EXPECT_TRUE(d["continuum_info"]["v_minus_in_spectrum"].get<bool>());
  EXPECT_EQ(d["continuum_info"]["v_minus_state_l"], 0);
}

TEST(Cli, KinkReport) {
  const auto r = run({"kink", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = json::parse(r.out);
  EXPECT_NEAR(d["derived"]["eps0"].get<double>(), 1.4, 1e-14);
  EXPECT_TRUE(d["derived"]["stable"].get<bool>());
  EXPECT_TRUE(d["diagnostics"]["warning"].is_null());
  const auto r1 = run({"kink", "--p", "1"});
  ASSERT_EQ(r1.code, 0);
  EXPECT_TRUE(json::parse(r1.out)["diagnostics"]["warning"].is_string());
}

TEST(Cli, EigenfunctionCsvRoundTrip) {
  const auto r = run({"eigenfunction", "--v0", "1", "--mu-ln2-half", "--n", "0",
                      "--output-format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, header);
  EXPECT_EQ(header, "z,psi_re,psi_im");
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(rows[200][0], 0.0);
  EXPECT_NEAR(rows[200][1], 0.30627092530519888, 1e-15);
  EXPECT_EQ(rows[200][2], 0.0);
  // %.17g survives the text round trip bit for bit.
  const rmspec::PotentialParams p(1.0, 0.5 * std::numbers::ln2);
  const auto st = rmspec::bound_states(p).at(0);
  for (std::size_t i = 0; i < rows.size(); i += 37) {
    EXPECT_EQ(rows[i][1], rmspec::eval_bound(p, st, rows[i][0]));
  }
}

TEST(Cli, EigenfunctionContinuumJson) {
  const auto r = run({"eigenfunction", "--v0", "1", "--mu-ln2-half", "--eps", "1",
                      "--grid", "-5:5:101"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = json::parse(r.out);
  EXPECT_EQ(d["continuum_info"]["kind"], "reflecting");
  EXPECT_EQ(d["continuum_info"]["samples"].size(), 101u);
  const auto& mid = d["continuum_info"]["samples"][50]["psi"];
  EXPECT_NEAR(mid["re"].get<double>(), 0.80122350049011343, 1e-13);
  EXPECT_NEAR(mid["im"].get<double>(), 0.20037898015329568, 1e-13);
}

TEST(Cli, JostAndContinuum) {
  const auto j = run({"jost", "--v0", "1", "--mu-ln2-half", "--kgrid", "0.5:3:6"});
  ASSERT_EQ(j.code, 0) << j.err;
  const json d = json::parse(j.out);
  EXPECT_EQ(d["continuum_info"]["jost"].size(), 6u);
  for (const auto& row : d["continuum_info"]["jost"]) {
    EXPECT_LT(row["wronskian_variation"].get<double>(), 1e-8);
  }
  const auto c = run({"continuum", "--v0", "1", "--mu-ln2-half", "--k", "2",
                      "--output-format", "csv", "--grid", "-3:3:7"});
  ASSERT_EQ(c.code, 0) << c.err;
  std::string header;
  EXPECT_EQ(parse_csv(c.out, header).size(), 7u);
  EXPECT_EQ(header, "z,u1_re,u1_im,u2_re,u2_im");
}

TEST(Cli, NuReduceAndExpand) {
  const auto n = run({"nu-reduce", "--v0", "1", "--mu-ln2-half", "--eps", "0.3"});
  ASSERT_EQ(n.code, 0) << n.err;
  for (const auto& r : json::parse(n.out)["diagnostics"]["branch_residual_max"]) {
    EXPECT_LT(r.get<double>(), 1e-13);
  }
  const auto e = run({"expand", "--v0", "6", "--mu", "0.3", "--function", "bound",
                      "--n", "0", "--grid", "-30:30:1201", "--kmax", "2", "--dk", "0.1"});
  ASSERT_EQ(e.code, 0) << e.err;
  const json d = json::parse(e.out);
  EXPECT_NEAR(d["discrete"][0]["coefficient"].get<double>(), 1.0, 1e-6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--v0", "1"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--v0", "1", "--mu", "0.3", "--mu-ln2-half"}).code, 1);
  EXPECT_EQ(run({"eigenfunction", "--v0", "1", "--mu", "0.3", "--grid", "1:2"}).code, 1);
  EXPECT_EQ(run({"spectrum", "--help"}).code, 0);
  EXPECT_EQ(run({"spectrum", "--v0", "-1", "--mu", "0.3"}).code, 2);
  EXPECT_EQ(run({"eigenfunction", "--v0", "1", "--mu-ln2-half", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"eigenfunction", "--v0", "1", "--mu-ln2-half", "--eps", "0.2"}).code, 2);
  EXPECT_EQ(run({"jost", "--v0", "1", "--mu-ln2-half", "--k", "1.224744871391589"}).code, 2);
  EXPECT_EQ(run({"kink", "--p", "0"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--v0", "1", "--mu", "0.2", "--output",
                 "/nonexistent-dir/x.json"}).code, 2);
  // --which outside {1, 2} is rejected by the parser.
  EXPECT_EQ(run({"eigenfunction", "--v0", "1", "--mu-ln2-half", "--eps", "1", "--which", "3"}).code, 1);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "rmspec_cli_test.json";
  const auto r = run({"spectrum", "--v0", "2", "--mu", "0", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const json d = json::parse(f);
  EXPECT_NEAR(d["discrete"][0]["eps"].get<double>(), 1.0, 1e-15);
  std::filesystem::remove(path);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("RMSPEC_TOL", "1e-6", 1);
  const auto r = run({"spectrum", "--v0", "1", "--mu-ln2-half"});
  ::setenv("RMSPEC_TOL", "garbage", 1);
  const auto bad = run({"spectrum", "--v0", "1", "--mu-ln2-half"});
  ::unsetenv("RMSPEC_TOL");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["diagnostics"]["quad_tol"].get<double>(), 1e-6);
  EXPECT_EQ(bad.code, 1);
}
