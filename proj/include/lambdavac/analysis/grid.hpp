#ifndef LAMBDAVAC_ANALYSIS_GRID_HPP
#define LAMBDAVAC_ANALYSIS_GRID_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lambdavac/ansatz/solution.hpp"
#include "lambdavac/curvature/metric.hpp"
#include "lambdavac/symcore/evaluate.hpp"

namespace lambdavac::analysis {

/// Regular lattice over (t, x) including both endpoints of each range.
struct Grid2D {
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t nt = 2;
  double x0 = 0.0;
  double x1 = 1.0;
  std::size_t nx = 2;

  /// "t0:t1:nt,x0:x1:nx". Throws ValidationError.
  static Grid2D parse(std::string_view spec);
  /// Throws ValidationError unless t0 < t1, x0 < x1 and both counts >= 2.
  void validate() const;

  double t(std::size_t i) const { return t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(nt - 1); }
  double x(std::size_t j) const { return x0 + (x1 - x0) * static_cast<double>(j) / static_cast<double>(nx - 1); }
  double dt() const { return (t1 - t0) / static_cast<double>(nt - 1); }
  double dx() const { return (x1 - x0) / static_cast<double>(nx - 1); }
  std::size_t size() const { return nt * nx; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * nx + j; }
};

/// Symbolic fields of one spacetime, ready for gridding over its first two
/// coordinates. Remaining coordinates are bound from `fixed`.
struct FieldSource {
  std::string name;
  curvature::MetricTensor metric;
  std::optional<sym::Number> lambda;
  std::optional<sym::Number> m;
  sym::Expression determinant;
  sym::Expression kretschmann;
  sym::Binding fixed;
};

/// Kretschmann scalar from the generic-a computation, so it stays finite
/// where only the chart degenerates.
FieldSource field_source(const ansatz::AnsatzSolution& sol);
/// Kretschmann scalar computed directly from the given components.
FieldSource field_source(const curvature::MetricTensor& g, std::string name, sym::Binding fixed = {});

/// One value per lattice point in row-major order (t outer, x inner); NaN
/// marks points where evaluation failed.
struct GridReport {
  Grid2D grid;
  std::string field;
  std::string source;
  std::optional<sym::Number> lambda;
  std::optional<sym::Number> m;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[grid.index(i, j)]; }
  std::size_t undefined_count() const;
};

/// Runs fn(begin, end) over [0, count) split across hardware threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

GridReport evaluate_grid(const sym::Expression& e, const FieldSource& source, const Grid2D& grid, std::string field);

/// +1, -1, or 0 when |g_00| <= 1e-12; NaN where g_00 is undefined.
GridReport g00_sign_map(const FieldSource& source, const Grid2D& grid);
GridReport g00_sign_map(const ansatz::AnsatzSolution& sol, const Grid2D& grid);

/// dt/dx = -2 g_01/g_00 of the null branch other than dt = 0 (which exists
/// at every point); NaN where g_00 is undefined or |g_00| <= 1e-12.
GridReport null_slope_field(const FieldSource& source, const Grid2D& grid);
GridReport null_slope_field(const ansatz::AnsatzSolution& sol, const Grid2D& grid);

/// -2 g_01 / g_00, simplified.
sym::Expression null_slope(const curvature::MetricTensor& g);

GridReport kretschmann_map(const FieldSource& source, const Grid2D& grid);

struct Locus {
  enum class Kind { kPhysical, kChart };
  Kind kind = Kind::kPhysical;
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 0.0;
  double x = 0.0;
  /// |K| for physical loci (largest neighbouring |K| when K is undefined at
  /// the point itself); |det g| for chart loci.
  double value = 0.0;
  bool undefined = false;
};

struct SingularLoci {
  double k_threshold = 1e6;
  double det_threshold = 1e-8;
  std::vector<Locus> loci;

  std::size_t count(Locus::Kind kind) const;
};

/// Physical loci: interior lattice points whose |K| exceeds k_threshold and
/// is not smaller than any of its 8 neighbours, plus interior points where K
/// is undefined next to a neighbour above the threshold. Chart loci: points
/// with |det g| < det_threshold and |K| <= k_threshold (the neighbouring
/// |K| when K is undefined there).
SingularLoci singularity_scan(const FieldSource& source, const Grid2D& grid, double k_threshold = 1e6,
                              double det_threshold = 1e-8);
SingularLoci singularity_scan(const ansatz::AnsatzSolution& sol, const Grid2D& grid, double k_threshold = 1e6,
                              double det_threshold = 1e-8);

/// Metric induced on the slice where the coordinates in `fixed` take the
/// given values: substitutes them and deletes their rows and columns.
/// Throws ValidationError for unknown coordinates, an empty assignment or
/// one that fixes every coordinate.
curvature::MetricTensor induced_slice(const curvature::MetricTensor& g, const sym::SubstitutionMap& fixed);
curvature::MetricTensor induced_slice(const ansatz::AnsatzSolution& sol, const sym::SubstitutionMap& fixed);

/// Header `t,x,<field>`, one row per lattice point, `nan` for undefined
/// cells, values with 17 significant digits.
void write_csv(std::ostream& out, const GridReport& report);

}  // namespace lambdavac::analysis

#endif  // LAMBDAVAC_ANALYSIS_GRID_HPP
