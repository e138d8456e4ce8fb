#ifndef LAMBDAVAC_CURVATURE_METRIC_HPP
#define LAMBDAVAC_CURVATURE_METRIC_HPP

#include <map>
#include <string>
#include <vector>

#include "lambdavac/curvature/tensor.hpp"
#include "lambdavac/symcore/expression.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace lambdavac::curvature {

/// Symmetric metric g_{μν} over named coordinates; index i is coords()[i].
/// Dimension is 4 for spacetime metrics and smaller for induced slices.
class MetricTensor {
 public:
  MetricTensor() = default;
  /// Zero metric over `coords`.
  explicit MetricTensor(std::vector<std::string> coords);
  static MetricTensor diagonal(std::vector<std::string> coords, const std::vector<sym::Expression>& entries);
  static MetricTensor minkowski(std::vector<std::string> coords = {"t", "x", "y", "z"});

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  const sym::Expression& operator()(std::size_t i, std::size_t j) const { return g_[i * coords_.size() + j]; }
  /// Sets g_ij and g_ji.
  void set(std::size_t i, std::size_t j, sym::Expression value);

  /// Numeric parameter values the components were built with (e.g. Lambda, m).
  std::map<std::string, sym::Number, std::less<>> parameters;

  /// Requires dimension() == 4.
  Tensor2 as_tensor() const;
  /// Free symbols of all components.
  std::vector<std::string> symbols() const;

 private:
  std::vector<std::string> coords_;
  std::vector<sym::Expression> g_;
};

/// Laplace expansion skipping structurally zero entries; any dimension.
sym::Expression determinant(const MetricTensor& g);

struct SignatureReport {
  int points_checked = 0;
  int degenerate_points = 0;
  int lorentzian_points = 0;
  bool ok() const { return points_checked > 0 && lorentzian_points == points_checked; }
};

/// Eigenvalue signs (+,-,-,-) at seeded sample points of a 4D metric;
/// points with |det g| < det_threshold are counted as degenerate and skipped.
SignatureReport check_signature(const MetricTensor& g, int points = 32, const sym::ZeroTestOptions& options = {},
                                double det_threshold = 1e-8);

}  // namespace lambdavac::curvature

#endif  // LAMBDAVAC_CURVATURE_METRIC_HPP
