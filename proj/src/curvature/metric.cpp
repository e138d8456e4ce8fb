#include "lambdavac/curvature/metric.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>
#include <stdexcept>

#include "lambdavac/symcore/evaluate.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::curvature {

using sym::Expression;

MetricTensor::MetricTensor(std::vector<std::string> coords) : coords_(std::move(coords)) {
  g_.assign(coords_.size() * coords_.size(), Expression(0));
}

MetricTensor MetricTensor::diagonal(std::vector<std::string> coords, const std::vector<Expression>& entries) {
  if (entries.size() != coords.size()) throw std::invalid_argument("diagonal needs one entry per coordinate");
  MetricTensor g(std::move(coords));
  for (std::size_t i = 0; i < entries.size(); ++i) g.set(i, i, entries[i]);
  return g;
}

MetricTensor MetricTensor::minkowski(std::vector<std::string> coords) {
  return diagonal(std::move(coords), {Expression(1), Expression(-1), Expression(-1), Expression(-1)});
}

void MetricTensor::set(std::size_t i, std::size_t j, Expression value) {
  const std::size_t n = coords_.size();
  g_[i * n + j] = value;
  g_[j * n + i] = std::move(value);
}

Tensor2 MetricTensor::as_tensor() const {
  if (dimension() != kDim) throw std::invalid_argument("expected a 4-dimensional metric");
  Tensor2 t;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) t(i, j) = (*this)(i, j);
  }
  return t;
}

std::vector<std::string> MetricTensor::symbols() const {
  std::set<std::string> all;
  for (const auto& e : g_) {
    auto s = sym::free_symbols(e);
    all.insert(s.begin(), s.end());
  }
  return {all.begin(), all.end()};
}

namespace {

Expression minor_determinant(const MetricTensor& g, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return g(rows[0], cols[0]);
  std::vector<Expression> terms;
  const std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Expression& entry = g(r, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    Expression minor = minor_determinant(g, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    terms.push_back(sym::mul({Expression(k % 2 == 0 ? 1 : -1), entry, minor}));
  }
  return sym::add(std::move(terms));
}

}  // namespace

Expression determinant(const MetricTensor& g) {
  std::vector<std::size_t> idx(g.dimension());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return sym::simplify(minor_determinant(g, idx, idx));
}

SignatureReport check_signature(const MetricTensor& g, int points, const sym::ZeroTestOptions& options,
                                double det_threshold) {
  if (g.dimension() != kDim) throw std::invalid_argument("signature check expects a 4-dimensional metric");
  const auto vars = g.symbols();
  std::vector<sym::CompiledExpression> entries;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) entries.emplace_back(g(i, j), vars);
  }
  SignatureReport report;
  std::vector<double> scratch;
  for (const auto& p : sym::sample_points(vars, points, options)) {
    Eigen::Matrix4d m;
    bool defined = true;
    for (std::size_t k = 0; k < entries.size() && defined; ++k) {
      auto out = entries[k].run(p, scratch);
      defined = out.ok();
      m(static_cast<Eigen::Index>(k / kDim), static_cast<Eigen::Index>(k % kDim)) = out.value;
    }
    if (!defined || std::abs(m.determinant()) < det_threshold) {
      ++report.degenerate_points;
      continue;
    }
    ++report.points_checked;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m, Eigen::EigenvaluesOnly);
    int positive = 0;
    int negative = 0;
    for (int k = 0; k < 4; ++k) (solver.eigenvalues()(k) > 0 ? positive : negative)++;
    if (positive == 1 && negative == 3) ++report.lorentzian_points;
  }
  return report;
}

}  // namespace lambdavac::curvature
