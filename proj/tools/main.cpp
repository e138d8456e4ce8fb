#include <iostream>

#include "CLI11.hpp"
#include "lambdavac/cli/run.hpp"

namespace {

void add_source_options(CLI::App* cmd, lambdavac::cli::RunConfig& c) {
  cmd->add_option("--builtin", c.builtin, "Catalog solution name");
  cmd->add_option("--metric", c.metric_path, "Path to a .metric file");
  cmd->add_option("--lambda", c.lambda, "Cosmological constant (exact decimal or rational)");
  cmd->add_option("--m", c.m, "Mass parameter");
  cmd->add_option("--tol", c.tolerance, "Zero-test relative tolerance");
  cmd->add_option("--seed", c.seed, "Zero-test seed");
  cmd->add_option("--out", c.out, "Write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  using lambdavac::cli::RunConfig;
  RunConfig config;
  CLI::App app{"Exact Lambda-vacuum ansatz toolkit"};
  app.set_version_flag("--version", "lambdavac 1.0.0");
  app.require_subcommand(1);

  const char* help[] = {
      "Check R_mn = Lambda g_mn component by component",
      "Scalar curvature, Kretschmann scalar and nonzero Ricci/Riemann components",
      "Weyl scalars in the canonical null tetrad",
      "Sign of g_00 on a (t, x) grid",
      "Slope of the second null branch on a (t, x) grid",
      "Physical and chart singular loci on a (t, x) grid",
      "Induced metric on a coordinate slice",
      "List the built-in solutions",
  };
  const auto& names = lambdavac::cli::subcommands();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& name = names[k];
    CLI::App* cmd = app.add_subcommand(name, help[k]);
    cmd->callback([&config, name] { config.subcommand = name; });
    if (name == "catalog") {
      cmd->add_option("--out", config.out, "Write the report to this file");
      continue;
    }
    add_source_options(cmd, config);
    if (name == "curvature" || name == "weyl" || name == "slice") {
      cmd->add_option("--at", config.at, name == "slice" ? "Fixed coordinates, e.g. t=0" : "Point, e.g. t=0,x=pi/2");
    }
    if (name == "signmap" || name == "nullfield" || name == "singularities") {
      cmd->add_option("--grid", config.grid, "t0:t1:nt,x0:x1:nx");
      cmd->add_option("--at", config.at, "Values of the remaining coordinates");
      cmd->add_option("--format", config.format, "json or csv");
    }
    if (name == "singularities") {
      cmd->add_option("--k-threshold", config.k_threshold, "Kretschmann threshold (default 1e6)");
      cmd->add_option("--det-threshold", config.det_threshold, "|det g| threshold (default 1e-8)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lambdavac::cli::kInputError;
  }
  return lambdavac::cli::run(config, std::cout, std::cerr);
}
