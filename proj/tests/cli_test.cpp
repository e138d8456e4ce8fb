#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lambdavac/cli/run.hpp"

namespace {

using lambdavac::cli::RunConfig;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& config) {
  std::ostringstream out, err;
  const int code = lambdavac::cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig builtin(const char* command, const char* name) {
  RunConfig c;
  c.subcommand = command;
  c.builtin = name;
  c.lambda = "1";
  c.m = "1";
  return c;
}

std::string data(const char* file) { return std::string(LAMBDAVAC_DATA_DIR) + "/metrics/" + file; }

TEST(Cli, VerifySpacePeriodic) {
  const auto r = invoke(builtin("verify", "space_periodic"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["summary"], "10/10 components vanish");
  EXPECT_EQ(j["conventions"]["riemann_sign_flip"], false);
  EXPECT_EQ(j["parameters"]["Lambda"], "1");
}

TEST(Cli, VerifyMinkowskiWithLambdaFails) {
  RunConfig c;
  c.subcommand = "verify";
  c.metric_path = data("minkowski.metric");
  c.lambda = "1";
  const auto r = invoke(c);
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["summary"], "6/10 components vanish");
  EXPECT_EQ(j["components"][0]["residual"], "-1");
  EXPECT_FALSE(j["components"][0]["vanishes"].get<bool>());
}

TEST(Cli, CurvatureSpotValues) {
  RunConfig c = builtin("curvature", "space_periodic");
  c.at = "t=0,x=0";
  const auto r = invoke(c);
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["scalar_curvature"]["exact"], "4");
  EXPECT_EQ(j["kretschmann"]["exact"], "652/243");  // = 5868/2187
  EXPECT_DOUBLE_EQ(j["kretschmann"]["value"].get<double>(), 5868.0 / 2187.0);
  EXPECT_EQ(j["riemann"].size(), 6u);
}

TEST(Cli, CurvatureOfExplicitFile) {
  RunConfig c;
  c.subcommand = "curvature";
  c.metric_path = data("space_periodic.metric");
  c.at = "t=1,x=0";
  const auto r = invoke(c);
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["kretschmann"]["exact"], "652/243");
  EXPECT_EQ(j["source"]["kind"], "file");
}

TEST(Cli, WeylReportsDiscrepancy) {
  RunConfig c = builtin("weyl", "space_periodic");
  c.at = "t=0,x=0";
  const json j = json::parse(invoke(c).out);
  EXPECT_EQ(j["petrov_hint"], "only-psi2");
  EXPECT_EQ(j["psi2_comparison"]["reference"]["exact"], "-17/162");
  EXPECT_EQ(j["psi2_comparison"]["computed"]["exact"], "-1/54");
  EXPECT_FALSE(j["psi2_comparison"]["matches"].get<bool>());
  EXPECT_EQ(j["constant_term_check"]["matched"], "neither");
  EXPECT_TRUE(j["tetrad_normalized"].get<bool>());
}

TEST(Cli, GridCsv) {
  RunConfig c = builtin("signmap", "space_periodic");
  c.grid = "0:1:2,0:1:2";
  c.format = "csv";
  const auto r = invoke(c);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "t,x,sign_g00\n0,0,1\n0,1,1\n1,0,1\n1,1,1\n");
}

TEST(Cli, NullFieldJson) {
  RunConfig c = builtin("nullfield", "space_periodic");
  c.grid = "0:1:2,0:pi/2:2";
  const json j = json::parse(invoke(c).out);
  EXPECT_DOUBLE_EQ(j["values"][1].get<double>(), 12.0 / 11.0);
}

TEST(Cli, SingularitiesAndSlice) {
  RunConfig c = builtin("singularities", "singular_periodic");
  c.grid = "1:20:100,-2:2:100";
  const auto r = invoke(c);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(json::parse(r.out)["counts"]["physical"].get<int>(), 0);

  RunConfig s = builtin("slice", "space_periodic");
  s.at = "t=0";
  const json j = json::parse(invoke(s).out);
  EXPECT_EQ(j["slice_coordinates"], (json{"x", "y", "z"}));
}

TEST(Cli, CatalogLists) {
  RunConfig c;
  c.subcommand = "catalog";
  const json j = json::parse(invoke(c).out);
  EXPECT_EQ(j["entries"].size(), 5u);
}

TEST(Cli, InputErrors) {
  RunConfig none;
  none.subcommand = "verify";
  EXPECT_EQ(invoke(none).code, 2);

  RunConfig both = builtin("verify", "space_periodic");
  both.metric_path = data("minkowski.metric");
  EXPECT_EQ(invoke(both).code, 2);

  RunConfig bad_lambda = builtin("verify", "space_periodic");
  bad_lambda.lambda = "1 +";
  const auto r = invoke(bad_lambda);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos);

  RunConfig missing_grid = builtin("signmap", "space_periodic");
  EXPECT_EQ(invoke(missing_grid).code, 2);

  RunConfig bad_format = builtin("curvature", "space_periodic");
  bad_format.format = "csv";
  EXPECT_EQ(invoke(bad_format).code, 2);

  RunConfig missing_file;
  missing_file.subcommand = "verify";
  missing_file.metric_path = "/nonexistent.metric";
  EXPECT_EQ(invoke(missing_file).code, 2);

  RunConfig constrained = builtin("verify", "lambda_zero");
  EXPECT_EQ(invoke(constrained).code, 2);

  RunConfig undefined_slice = builtin("slice", "singular_periodic");
  undefined_slice.at = "t=0";
  const auto u = invoke(undefined_slice);
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(json::parse(u.out)["warnings"][0], "the induced metric is degenerate on this slice");

  RunConfig unknown;
  unknown.subcommand = "bogus";
  EXPECT_EQ(invoke(unknown).code, 2);
}

TEST(Cli, DefaultsProjectOntoConstraints) {
  RunConfig c;
  c.subcommand = "verify";
  c.builtin = "lambda_zero";
  const auto r = invoke(c);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["parameters"]["Lambda"], "0");
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "lambdavac_cli_test.json";
  RunConfig c = builtin("verify", "space_periodic");
  c.out = path.string();
  const auto r = invoke(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(json::parse(s.str())["summary"], "10/10 components vanish");
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  RunConfig c = builtin("weyl", "singular_periodic");
  c.seed = 12345;
  EXPECT_EQ(invoke(c).out, invoke(c).out);
  RunConfig g = builtin("singularities", "singular_periodic");
  g.grid = "1:12:60,-1.4:1.4:60";
  EXPECT_EQ(invoke(g).out, invoke(g).out);
}

TEST(Cli, EveryEntryEverySubcommand) {
  for (const char* name : {"space_periodic", "regular_periodic", "singular_periodic", "conformal_flat", "lambda_zero"}) {
    for (const auto& command : lambdavac::cli::subcommands()) {
      if (command == "catalog") continue;
      RunConfig c;
      c.subcommand = command;
      c.builtin = name;
      c.grid = "0:12:25,-3:3:25";
      if (command == "slice") c.at = "t=1";
      const auto r = invoke(c);
      EXPECT_EQ(r.code, 0) << name << " " << command << ": " << r.err;
    }
  }
}

}  // namespace
