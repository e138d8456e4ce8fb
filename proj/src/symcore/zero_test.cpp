#include "lambdavac/symcore/zero_test.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lambdavac/errors.hpp"
#include "lambdavac/symcore/evaluate.hpp"

namespace lambdavac::sym {
namespace {

class PointSampler {
 public:
  PointSampler(const std::vector<std::string>& vars, const ZeroTestOptions& options) : rng_(options.seed) {
    for (const auto& v : vars) {
      auto it = options.boxes.find(v);
      boxes_.push_back(it == options.boxes.end() ? options.default_box : it->second);
    }
  }

  void next(std::vector<double>& point) {
    point.resize(boxes_.size());
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      // Uniform in [lower, upper] built from the raw 53-bit stream so the
      // sequence does not depend on the standard library's distributions.
      double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
      point[i] = boxes_[i].lower + u * (boxes_[i].upper - boxes_[i].lower);
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Interval> boxes_;
};

}  // namespace

ZeroTestReport zero_test(const Expression& e, const std::vector<std::string>& vars,
                         const ZeroTestOptions& options) {
  ZeroTestReport report;
  if (e.is_constant()) {
    const double value = std::abs(e.number().to_double());
    report.samples_used = options.samples;
    report.worst_relative = value / (1.0 + value);
    report.zero = e.number().is_exact() ? e.number().is_zero() : report.worst_relative <= options.tolerance;
    return report;
  }
  CompiledExpression compiled(e, vars);
  PointSampler sampler(vars, options);
  std::vector<double> point;
  std::vector<double> scratch;
  const int max_draws = std::max(1, options.samples * options.attempts_per_sample);
  bool all_within = true;
  for (int draw = 0; draw < max_draws && report.samples_used < options.samples; ++draw) {
    sampler.next(point);
    auto out = compiled.run(point, scratch);
    if (!out.ok()) {
      ++report.domain_failures;
      continue;
    }
    ++report.samples_used;
    double relative = std::abs(out.value) / (1.0 + out.max_magnitude);
    report.worst_relative = std::max(report.worst_relative, relative);
    if (relative > options.tolerance) all_within = false;
  }
  if (report.samples_used == 0) {
    throw InconclusiveError("zero test inconclusive: every sample point hit a domain error for " +
                            to_string(e).substr(0, 200));
  }
  report.zero = all_within;
  return report;
}

bool prob_zero_test(const Expression& e, const std::vector<std::string>& vars, const ZeroTestOptions& options) {
  return zero_test(e, vars, options).zero;
}

bool is_zero_identity(const Expression& e, const ZeroTestOptions& options) {
  if (e.is_zero()) return true;
  auto symbols = free_symbols(e);
  return prob_zero_test(e, std::vector<std::string>(symbols.begin(), symbols.end()), options);
}

std::vector<std::vector<double>> sample_points(const std::vector<std::string>& vars, int count,
                                               const ZeroTestOptions& options) {
  PointSampler sampler(vars, options);
  std::vector<std::vector<double>> points(static_cast<std::size_t>(count));
  for (auto& p : points) sampler.next(p);
  return points;
}

}  // namespace lambdavac::sym
