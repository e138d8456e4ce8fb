#include "lambdavac/ansatz/chart.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/errors.hpp"
#include "lambdavac/symcore/evaluate.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::ansatz {

using sym::Expression;
using sym::Number;

namespace {

sym::SubstitutionMap as_substitution(const ChartTransform& t) {
  sym::SubstitutionMap map;
  for (std::size_t i = 0; i < t.to.size(); ++i) map.emplace(t.to[i], t.map[i]);
  return map;
}

void check_shape(const ChartTransform& t, const char* what) {
  if (t.from.size() != t.to.size() || t.map.size() != t.to.size()) {
    throw ChartError(std::string(what) + ": coordinate lists and map have different lengths");
  }
}

sym::ZeroTestOptions on_domain(const ChartTransform& t, sym::ZeroTestOptions options) {
  for (const auto& [name, box] : t.domain) options.boxes.insert_or_assign(name, box);
  return options;
}

}  // namespace

ChartTransform identity_chart(const std::vector<std::string>& coords) {
  ChartTransform t;
  t.from = coords;
  t.to = coords;
  for (const auto& c : coords) t.map.push_back(Expression::symbol(c));
  return t;
}

ChartTransform compose(const ChartTransform& first, const ChartTransform& second) {
  check_shape(first, "compose");
  check_shape(second, "compose");
  if (first.to != second.from) throw ChartError("compose: first's target coordinates differ from second's source");
  ChartTransform out;
  out.from = first.from;
  out.to = second.to;
  out.domain = first.domain;
  const sym::SubstitutionMap inner = as_substitution(first);
  for (const auto& e : second.map) out.map.push_back(sym::simplify(sym::substitute(e, inner)));
  return out;
}

curvature::MetricTensor pullback_metric(const curvature::MetricTensor& g, const ChartTransform& forward,
                                        const ChartTransform& inverse, const sym::ZeroTestOptions& options) {
  check_shape(forward, "forward transform");
  check_shape(inverse, "inverse transform");
  const std::size_t n = g.dimension();
  if (forward.from != g.coords() || inverse.to != g.coords() || inverse.from != forward.to || forward.to.size() != n) {
    throw ChartError("transform coordinates do not match the metric's");
  }
  const sym::ZeroTestOptions domain_options = on_domain(inverse, options);
  const std::vector<std::string>& new_coords = inverse.from;

  // forward(inverse(x')) = x' on the declared domain.
  const sym::SubstitutionMap old_in_new = as_substitution(inverse);
  for (std::size_t i = 0; i < n; ++i) {
    const Expression round_trip = sym::substitute(forward.map[i], old_in_new) - Expression::symbol(new_coords[i]);
    bool ok = false;
    try {
      ok = sym::prob_zero_test(sym::simplify(round_trip), new_coords, domain_options);
    } catch (const InconclusiveError&) {
    }
    if (!ok) throw ChartError("inverse does not invert the transform for coordinate '" + new_coords[i] + "'");
  }

  // J(μ, a) = ∂x^μ / ∂x'^a
  std::vector<Expression> jacobian(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t a = 0; a < n; ++a) {
      jacobian[mu * n + a] = sym::simplify(sym::differentiate(inverse.map[mu], new_coords[a]));
    }
  }
  {
    std::vector<sym::CompiledExpression> compiled;
    for (const auto& e : jacobian) compiled.emplace_back(e, new_coords);
    std::vector<double> scratch;
    int defined = 0;
    for (const auto& p : sym::sample_points(new_coords, 64, domain_options)) {
      Eigen::MatrixXd J(n, n);
      bool ok = true;
      for (std::size_t k = 0; k < compiled.size() && ok; ++k) {
        auto r = compiled[k].run(p, scratch);
        ok = r.ok();
        J(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) = r.value;
      }
      if (!ok) continue;
      ++defined;
      if (std::abs(J.determinant()) < 1e-12) throw ChartError("Jacobian determinant vanishes on the declared domain");
    }
    if (defined == 0) throw ChartError("Jacobian is undefined everywhere on the declared domain");
  }

  std::vector<Expression> moved(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = mu; nu < n; ++nu) {
      moved[mu * n + nu] = moved[nu * n + mu] = sym::simplify(sym::substitute(g(mu, nu), old_in_new));
    }
  }

  curvature::CurvatureOptions tidy_options;
  tidy_options.zero_test = domain_options;
  curvature::MetricTensor out(new_coords);
  out.parameters = g.parameters;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::vector<Expression> terms;
      for (std::size_t mu = 0; mu < n; ++mu) {
        const Expression& ja = jacobian[mu * n + a];
        if (ja.is_zero()) continue;
        for (std::size_t nu = 0; nu < n; ++nu) {
          const Expression& jb = jacobian[nu * n + b];
          const Expression& gm = moved[mu * n + nu];
          if (jb.is_zero() || gm.is_zero()) continue;
          terms.push_back(sym::mul({ja, jb, gm}));
        }
      }
      out.set(a, b, curvature::tidy(sym::add(std::move(terms)), tidy_options));
    }
  }
  return out;
}

ChartTransform eta_xi_chart(const AnsatzSolution& sol) {
  const auto& c = sol.coords;
  ChartTransform t;
  t.from = {c.begin(), c.end()};
  t.to = {"eta", "xi", c[2], c[3]};
  const Expression time = Expression::symbol(c[0]);
  t.map = {time,
           sym::simplify(Expression(sol.lambda) * time * Expression(Number::rational(1, 3)) -
                         Expression(2) * sym::pow(sol.a, Expression(-1))),
           Expression::symbol(c[2]), Expression::symbol(c[3])};
  return t;
}

ChartTransform conformal_flat_eta_xi_inverse(const Number& lambda) {
  const Expression eta = Expression::symbol("eta");
  const Expression xi = Expression::symbol("xi");
  ChartTransform t;
  t.from = {"eta", "xi", "y", "z"};
  t.to = {"t", "x", "y", "z"};
  t.map = {eta, sym::simplify(Expression(lambda) * eta * Expression(Number::rational(1, 3)) - sym::sin(eta) - xi),
           Expression::symbol("y"), Expression::symbol("z")};
  t.domain = {{"eta", {1.5, 3.0}}, {"xi", {-1.5, 0.0}}};
  return t;
}

ChartTransform light_cone_chart() {
  const Expression eta = Expression::symbol("eta");
  const Expression xi = Expression::symbol("xi");
  const Expression half(Number::rational(1, 2));
  ChartTransform t;
  t.from = {"eta", "xi", "y", "z"};
  t.to = {"T", "X", "y", "z"};
  t.map = {half * (xi + eta), half * (xi - eta), Expression::symbol("y"), Expression::symbol("z")};
  t.domain = {{"eta", {1.5, 3.0}}, {"xi", {-1.5, 0.0}}};
  return t;
}

ChartTransform light_cone_inverse() {
  const Expression T = Expression::symbol("T");
  const Expression X = Expression::symbol("X");
  ChartTransform t;
  t.from = {"T", "X", "y", "z"};
  t.to = {"eta", "xi", "y", "z"};
  t.map = {T - X, T + X, Expression::symbol("y"), Expression::symbol("z")};
  t.domain = {{"T", {0.5, 1.0}}, {"X", {-2.0, -1.0}}};
  return t;
}

Expression conformal_factor(const Number& lambda) {
  const Expression T = Expression::symbol("T");
  const Expression X = Expression::symbol("X");
  const Expression l(lambda);
  return Expression(6) * sym::pow(T * (l - Expression(3)) - X * (l + Expression(3)), Expression(-1));
}

}  // namespace lambdavac::ansatz
