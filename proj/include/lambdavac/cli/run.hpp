#ifndef LAMBDAVAC_CLI_RUN_HPP
#define LAMBDAVAC_CLI_RUN_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lambdavac::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// One invocation. Numeric parameters stay as text so that decimals such as
/// 0.3 are read as exact rationals.
struct RunConfig {
  std::string subcommand;
  std::optional<std::string> builtin;
  std::optional<std::string> metric_path;
  std::optional<std::string> lambda;
  std::optional<std::string> m;
  /// "t0:t1:nt,x0:x1:nx"
  std::optional<std::string> grid;
  /// "t=..,x=..[,y=..,z=..]"; for `slice`, the coordinates held fixed.
  std::optional<std::string> at;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<double> k_threshold;
  std::optional<double> det_threshold;
  std::optional<std::string> out;
  std::string format = "json";
};

/// verify, curvature, weyl, signmap, nullfield, singularities, slice, catalog
const std::vector<std::string>& subcommands();

/// Writes the report to config.out (or `out`) and diagnostics to `err`.
/// Returns kInputError for unusable input, kVerificationFailure when
/// `verify` finds a nonvanishing residual component, kSuccess otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lambdavac::cli

#endif  // LAMBDAVAC_CLI_RUN_HPP
