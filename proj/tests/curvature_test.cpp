#include <gtest/gtest.h>

#include <cmath>

#include "lambdavac/ansatz/solution.hpp"
#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/simplify.hpp"
#include "lambdavac/symcore/zero_test.hpp"
#include "support/numeric_curvature.hpp"

namespace {

using namespace lambdavac;
using curvature::MetricTensor;
using sym::Expression;

Expression P(const char* text) { return metriclang::parse_expression(text); }

// g = t^-2 diag(1, -1, -1, -1): maximally symmetric and conformally flat.
// With the pinned conventions R_mn = -3 g_mn, so R = -12 and K = 24.
MetricTensor de_sitter() {
  const Expression f = P("t^(-2)");
  return MetricTensor::diagonal({"t", "x", "y", "z"}, {f, -f, -f, -f});
}

MetricTensor trig_metric() {
  return ansatz::make_solution(P("(2 + cos(x))*(2 + sin(t/6))"), 1, 1).metric;
}

TEST(Metric, DeterminantAndSymbols) {
  MetricTensor g = MetricTensor::minkowski();
  EXPECT_EQ(curvature::determinant(g), Expression(-1));
  g.set(0, 1, P("x"));
  EXPECT_EQ(g(1, 0), P("x"));
  EXPECT_TRUE(sym::is_zero_identity(curvature::determinant(g) + Expression(1) + P("x^2")));
  EXPECT_EQ(g.symbols(), (std::vector<std::string>{"x"}));
}

TEST(Metric, SignatureCheck) {
  EXPECT_TRUE(curvature::check_signature(MetricTensor::minkowski()).ok());
  EXPECT_TRUE(curvature::check_signature(trig_metric()).ok());
  const MetricTensor euclid = MetricTensor::diagonal({"t", "x", "y", "z"}, {1, 1, 1, 1});
  EXPECT_FALSE(curvature::check_signature(euclid).ok());
}

TEST(Curvature, InverseTimesMetricIsIdentity) {
  const MetricTensor g = trig_metric();
  const auto inv = curvature::invert_metric(g);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Expression s(0);
      for (std::size_t k = 0; k < 4; ++k) s += g(i, k) * inv(k, j);
      EXPECT_TRUE(sym::is_zero_identity(s - Expression(i == j ? 1 : 0))) << i << j;
    }
  }
}

TEST(Curvature, SingularMetricRejected) {
  MetricTensor g = MetricTensor::minkowski();
  g.set(0, 0, 0);
  EXPECT_THROW((void)curvature::invert_metric(g), SingularMetricError);
}

TEST(Curvature, FlatSpaceIsFlat) {
  const auto b = curvature::compute_curvature(MetricTensor::minkowski());
  EXPECT_EQ(b.riemann.nonzero_count(), 0u);
  EXPECT_EQ(b.christoffel.nonzero_count(), 0u);
  EXPECT_TRUE(b.scalar.is_zero());
  EXPECT_TRUE(b.kretschmann.is_zero());
}

TEST(Curvature, DeSitterExactInvariants) {
  const auto b = curvature::compute_curvature(de_sitter());
  EXPECT_EQ(b.scalar, Expression(-12));
  EXPECT_EQ(b.kretschmann, Expression(24));
  const auto residual = curvature::einstein_residual(b, Expression(-3));
  for (const auto& e : residual.data()) EXPECT_TRUE(sym::is_zero_identity(e));
  // Conformally flat.
  for (const auto& e : b.weyl.data()) EXPECT_TRUE(sym::is_zero_identity(e));
  // Gamma^t_{tt} = -1/t.
  EXPECT_TRUE(sym::is_zero_identity(b.christoffel(0, 0, 0) + P("1/t")));
}

TEST(Curvature, MatchesFiniteDifferenceOracle) {
  const MetricTensor g = trig_metric();
  const auto b = curvature::compute_curvature(g);
  const auto fn = oracle::sampled(g);
  for (const auto& q : oracle::well_conditioned_points(g, 3)) {
    const auto c = oracle::curvature(fn, q);
    const sym::Binding at{{"t", q[0]}, {"x", q[1]}, {"y", q[2]}, {"z", q[3]}};
    double scale = 1.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) scale = std::max(scale, std::abs(c.riemann[i][j][k][l]));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l)
            EXPECT_NEAR(sym::evaluate(b.riemann(i, j, k, l), at), c.riemann[i][j][k][l], 1e-6 * scale)
                << i << j << k << l;
    EXPECT_NEAR(sym::evaluate(b.scalar, at), c.scalar, 1e-6 * std::max(1.0, std::abs(c.scalar)));
    EXPECT_NEAR(sym::evaluate(b.kretschmann, at), c.kretschmann, 1e-6 * std::max(1.0, std::abs(c.kretschmann)));
  }
}

TEST(Curvature, IdentitiesHold) {
  const auto b = curvature::compute_curvature(trig_metric());
  const auto sym_report = curvature::check_riemann_symmetries(b);
  EXPECT_EQ(sym_report.checked, 1024);
  EXPECT_TRUE(sym_report.ok());
  EXPECT_TRUE(curvature::check_weyl_traceless(b).ok());
}

TEST(Curvature, SymmetryShortcutAgreesWithFullComputation) {
  curvature::CurvatureOptions full;
  full.exploit_symmetries = false;
  const MetricTensor g = trig_metric();
  const auto a = curvature::compute_curvature(g);
  const auto b = curvature::compute_curvature(g, full);
  for (std::size_t k = 0; k < a.riemann.data().size(); ++k) {
    EXPECT_TRUE(sym::is_zero_identity(a.riemann.data()[k] - b.riemann.data()[k])) << k;
  }
}

TEST(Curvature, RicciOnlyStopsEarly) {
  curvature::CurvatureOptions options;
  options.ricci_only = true;
  const auto b = curvature::compute_curvature(de_sitter(), options);
  EXPECT_EQ(b.scalar, Expression(-12));
  EXPECT_EQ(b.weyl.nonzero_count(), 0u);
}

TEST(Curvature, ResidualDetectsWrongLambda) {
  const auto r = curvature::einstein_residual(de_sitter(), Expression(1));
  EXPECT_TRUE(sym::is_zero_identity(r(0, 0) + P("4/t^2")));
  EXPECT_TRUE(r(0, 1).is_zero());
}

TEST(Curvature, JetRouteRealizesToDirectRoute) {
  sym::DependencyMap deps;
  deps.declare("a", {"t", "x"});
  const Expression a = Expression::symbol("a");
  const Expression b = ansatz::derive_b(a, Expression(1), Expression(1), "t", &deps);
  const MetricTensor generic = ansatz::ansatz_metric(a, b, ansatz::kDefaultCoordinates, &deps);
  curvature::CurvatureOptions options;
  options.dependencies = &deps;
  options.expand = true;
  const auto jets = curvature::compute_curvature(generic, options);
  const Expression concrete_a = P("(2 + cos(x))*(2 + sin(t/6))");
  const auto realized = curvature::realize(jets, deps, {{"a", concrete_a}});
  const auto direct = curvature::compute_curvature(trig_metric());
  EXPECT_TRUE(sym::is_zero_identity(realized.kretschmann - direct.kretschmann));
  EXPECT_TRUE(sym::is_zero_identity(realized.riemann(2, 3, 2, 3) - direct.riemann(2, 3, 2, 3)));
  // Generic result: R = 4 Lambda for every a.
  EXPECT_TRUE(jets.scalar == Expression(4));
}

}  // namespace
