#ifndef LAMBDAVAC_ANSATZ_SOLUTION_HPP
#define LAMBDAVAC_ANSATZ_SOLUTION_HPP

#include <array>
#include <string>

#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/newmanpenrose/weyl_scalars.hpp"
#include "lambdavac/symcore/calculus.hpp"

namespace lambdavac::ansatz {

using Coordinates = std::array<std::string, 4>;
inline const Coordinates kDefaultCoordinates{"t", "x", "y", "z"};

/// Metric generated by a(t, x):
///   ds² = b dt² + 2 a_x dt dx - a² (dy² + dz²),  b = 2 a_t + Λ a²/3 + m/a.
struct AnsatzSolution {
  std::string name = "custom";
  Coordinates coords = kDefaultCoordinates;
  sym::Expression a;
  sym::Number lambda;
  sym::Number m;
  sym::Expression b;
  curvature::MetricTensor metric;
};

/// b = 2 ∂a/∂t + Λ a²/3 + m/a, simplified. `time` names the first coordinate.
sym::Expression derive_b(const sym::Expression& a, const sym::Expression& lambda, const sym::Expression& m,
                         std::string_view time = "t", const sym::DependencyMap* dependencies = nullptr);
sym::Expression derive_b(const sym::Expression& a, const sym::Number& lambda, const sym::Number& m,
                         std::string_view time = "t");

/// g_00 = b, g_01 = a_x, g_22 = g_33 = -a², all other components zero.
curvature::MetricTensor ansatz_metric(const sym::Expression& a, const sym::Expression& b, const Coordinates& coords,
                                      const sym::DependencyMap* dependencies = nullptr);
curvature::MetricTensor build_metric(const AnsatzSolution& sol);

/// Derives b and the metric. Throws ValidationError when a depends on a
/// coordinate other than the first two, when a is identically zero, or when
/// m < 0.
AnsatzSolution make_solution(sym::Expression a, sym::Number lambda, sym::Number m,
                             const Coordinates& coords = kDefaultCoordinates, std::string name = "custom");

/// (2 a a_xt + 2 a_x a_t - b_x a - a_x b) / a_x, the R_22 component of the
/// block metric for arbitrary (a, b). Throws DegenerateError when a_x ≡ 0.
sym::Expression closed_form_r22(const sym::Expression& a, const sym::Expression& b,
                                const Coordinates& coords = kDefaultCoordinates,
                                const sym::DependencyMap* dependencies = nullptr);

/// Closed form -Λ/9 + m/(6a³) that the Weyl report compares Ψ2 against.
sym::Expression psi2_reference(const sym::Expression& a, const sym::Number& lambda, const sym::Number& m);

/// Curvature of an ansatz solution computed once for a generic function
/// a(t, x) (exact Laurent polynomials in a and its derivatives) and then
/// realized for the solution's concrete a.
struct AnsatzCurvature {
  sym::DependencyMap dependencies;
  /// Name of the function symbol standing for a in `generic`.
  std::string function;
  curvature::MetricTensor generic_metric;
  curvature::CurvatureBundle generic;
  curvature::CurvatureBundle concrete;
  np::WeylScalars generic_scalars;
  np::WeylScalars scalars;
};

AnsatzCurvature ansatz_curvature(const AnsatzSolution& sol, const sym::ZeroTestOptions& zero_test = {});

/// Replaces the generic function symbol and its derivatives by the
/// solution's a.
sym::Expression realize(const AnsatzCurvature& curvature, const AnsatzSolution& sol, const sym::Expression& e);

}  // namespace lambdavac::ansatz

#endif  // LAMBDAVAC_ANSATZ_SOLUTION_HPP
