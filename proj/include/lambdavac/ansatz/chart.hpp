#ifndef LAMBDAVAC_ANSATZ_CHART_HPP
#define LAMBDAVAC_ANSATZ_CHART_HPP

#include <map>
#include <string>
#include <vector>

#include "lambdavac/ansatz/solution.hpp"
#include "lambdavac/curvature/metric.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace lambdavac::ansatz {

/// Coordinate map from `from` to `to`: to[i] = map[i](from).
struct ChartTransform {
  std::vector<std::string> from;
  std::vector<std::string> to;
  std::vector<sym::Expression> map;
  /// Sampling box over `from` coordinates used for invertibility checks;
  /// coordinates without an entry use the zero test's default box.
  std::map<std::string, sym::Interval, std::less<>> domain;
};

ChartTransform identity_chart(const std::vector<std::string>& coords);

/// Applies `first`, then `second`; the domain is first's.
ChartTransform compose(const ChartTransform& first, const ChartTransform& second);

/// g'_{ab} = (∂x^μ/∂x'^a)(∂x^ν/∂x'^b) g_{μν}(x(x')).
/// `forward` maps g's coordinates to new ones and `inverse` maps back; the
/// check inverse-then-forward = identity runs on inverse.domain, and the
/// Jacobian determinant is required nonzero at 64 seeded points of it.
/// Throws ChartError when either check fails.
curvature::MetricTensor pullback_metric(const curvature::MetricTensor& g, const ChartTransform& forward,
                                        const ChartTransform& inverse, const sym::ZeroTestOptions& options = {});

/// (t, x, y, z) -> (eta, xi, y, z) with eta = t, xi = Λt/3 - 2/a.
ChartTransform eta_xi_chart(const AnsatzSolution& sol);
/// Inverse of eta_xi_chart for a = 2/(x + sin t): t = eta,
/// x = Λ eta/3 - sin(eta) - xi. Domain eta ∈ [1.5, 3], xi ∈ [-1.5, 0].
ChartTransform conformal_flat_eta_xi_inverse(const sym::Number& lambda);
/// (eta, xi, y, z) -> (T, X, y, z) with T = (xi + eta)/2, X = (xi - eta)/2.
ChartTransform light_cone_chart();
/// eta = T - X, xi = T + X. Domain T ∈ [0.5, 1], X ∈ [-2, -1].
ChartTransform light_cone_inverse();

/// a = 6/(T(Λ-3) - X(Λ+3)), the conformal factor of the m = 0 solution in
/// the (T, X) chart.
sym::Expression conformal_factor(const sym::Number& lambda);

}  // namespace lambdavac::ansatz

#endif  // LAMBDAVAC_ANSATZ_CHART_HPP
