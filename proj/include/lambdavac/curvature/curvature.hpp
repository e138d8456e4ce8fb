#ifndef LAMBDAVAC_CURVATURE_CURVATURE_HPP
#define LAMBDAVAC_CURVATURE_CURVATURE_HPP

#include <string>
#include <vector>

#include "lambdavac/curvature/metric.hpp"
#include "lambdavac/curvature/tensor.hpp"
#include "lambdavac/symcore/calculus.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace lambdavac::curvature {

// Conventions (fixed for the whole library):
//   Γ^ρ_{μν} = ½ g^{ρσ}(∂_μ g_{σν} + ∂_ν g_{σμ} - ∂_σ g_{μν})
//   R^ρ_{σμν} = ∂_μ Γ^ρ_{νσ} - ∂_ν Γ^ρ_{μσ} + Γ^ρ_{μλ} Γ^λ_{νσ} - Γ^ρ_{νλ} Γ^λ_{μσ}
//   R_{αβμν} = g_{αρ} R^ρ_{βμν},  R_{μν} = R^ρ_{μρν},  R = g^{μν} R_{μν}
//   C_{abcd} = R_{abcd} - ½(g_{ac}R_{bd} - g_{ad}R_{bc} - g_{bc}R_{ad} + g_{bd}R_{ac})
//              + (R/6)(g_{ac}g_{bd} - g_{ad}g_{bc})
// With signature (+,-,-,-) an Einstein space with cosmological constant Λ
// satisfies R_{μν} = Λ g_{μν} and R = 4Λ.

struct CurvatureOptions {
  /// Function symbols differentiated into jet symbols (a -> a_t, a_x, ...).
  const sym::DependencyMap* dependencies = nullptr;
  /// Expand every intermediate component before simplifying. Exact and
  /// compact for Laurent polynomials in jet symbols; on trigonometric
  /// components it multiplies out powers of sums and grows quickly.
  bool expand = false;
  /// Replace components that pass the zero test by 0.
  bool prune_zeros = true;
  /// Compute only independent Riemann/Weyl components and fill the rest by
  /// index symmetries; when false all 256 components are computed directly.
  bool exploit_symmetries = true;
  /// Stop after the Ricci tensor and scalar.
  bool ricci_only = false;
  sym::ZeroTestOptions zero_test{};
};

struct CurvatureBundle {
  std::vector<std::string> coords;
  Tensor2 metric;
  Tensor2 inverse;
  /// christoffel(ρ, μ, ν) = Γ^ρ_{μν}
  Tensor3 christoffel;
  /// riemann(α, β, μ, ν) = R_{αβμν}
  Tensor4 riemann;
  Tensor2 ricci;
  sym::Expression scalar;
  sym::Expression kretschmann;
  /// weyl(a, b, c, d) = C_{abcd}
  Tensor4 weyl;
};

/// Expand (optional), simplify and prune one component per `options`.
sym::Expression tidy(const sym::Expression& e, const CurvatureOptions& options);

/// g^{μν} through the adjugate. Throws SingularMetricError when det g is
/// identically zero.
Tensor2 invert_metric(const MetricTensor& g, const CurvatureOptions& options = {});

CurvatureBundle compute_curvature(const MetricTensor& g, const CurvatureOptions& options = {});

/// g^{μν} R_{μν} from the bundle's inverse metric and Ricci tensor.
sym::Expression scalar_curvature(const CurvatureBundle& bundle, const CurvatureOptions& options = {});

/// R_{μν} - Λ g_{μν}, component-wise tidied.
Tensor2 einstein_residual(const CurvatureBundle& bundle, const sym::Expression& lambda,
                          const CurvatureOptions& options = {});
Tensor2 einstein_residual(const MetricTensor& g, const sym::Expression& lambda, CurvatureOptions options = {});

/// Replaces jet symbols throughout a bundle computed with `dependencies`.
CurvatureBundle realize(const CurvatureBundle& bundle, const sym::DependencyMap& dependencies,
                        const sym::SubstitutionMap& realizations);

/// Number of component relations failing the zero test.
struct IdentityReport {
  int checked = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

/// Antisymmetry in each pair, pair exchange and the first Bianchi identity
/// over all index combinations of R_{abcd}.
IdentityReport check_riemann_symmetries(const CurvatureBundle& bundle, const sym::ZeroTestOptions& options = {});

/// g^{ac} C_{abcd} for every (b, d).
IdentityReport check_weyl_traceless(const CurvatureBundle& bundle, const sym::ZeroTestOptions& options = {});

}  // namespace lambdavac::curvature

#endif  // LAMBDAVAC_CURVATURE_CURVATURE_HPP
