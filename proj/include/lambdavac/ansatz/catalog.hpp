#ifndef LAMBDAVAC_ANSATZ_CATALOG_HPP
#define LAMBDAVAC_ANSATZ_CATALOG_HPP

#include <string_view>
#include <vector>

#include "lambdavac/ansatz/solution.hpp"

namespace lambdavac::ansatz {

enum class Constraint { kNone, kLambdaNonzero, kMassZero, kLambdaZero };

struct CatalogEntry {
  std::string_view name;
  /// a(t, x) in metric-expression syntax; may use Lambda.
  std::string_view a;
  Constraint constraint;
  std::string_view summary;
};

/// space_periodic, regular_periodic, singular_periodic, conformal_flat,
/// lambda_zero, in that order.
const std::vector<CatalogEntry>& catalog();

/// Throws CatalogError for an unknown name or a violated constraint.
AnsatzSolution builtin(std::string_view name, const sym::Number& lambda, const sym::Number& m);

/// (Λ, m) with constrained entries projected onto the constraint:
/// conformal_flat takes m = 0, lambda_zero takes Λ = 0. Λ = 0 for
/// singular_periodic is returned unchanged (and rejected by builtin).
std::pair<sym::Number, sym::Number> project_parameters(std::string_view name, const sym::Number& lambda,
                                                       const sym::Number& m);

std::string_view describe(Constraint constraint);

}  // namespace lambdavac::ansatz

#endif  // LAMBDAVAC_ANSATZ_CATALOG_HPP
