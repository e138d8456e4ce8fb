#include "lambdavac/ansatz/solution.hpp"

#include <algorithm>

#include "lambdavac/errors.hpp"
#include "lambdavac/newmanpenrose/tetrad.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::ansatz {

using sym::Expression;
using sym::Number;

Expression derive_b(const Expression& a, const Expression& lambda, const Expression& m, std::string_view time,
                    const sym::DependencyMap* dependencies) {
  const Expression a_t = sym::differentiate(a, time, dependencies);
  return sym::simplify(Expression(2) * a_t + lambda * a * a * Expression(Number::rational(1, 3)) +
                       m * sym::pow(a, Expression(-1)));
}

Expression derive_b(const Expression& a, const Number& lambda, const Number& m, std::string_view time) {
  return derive_b(a, Expression(lambda), Expression(m), time);
}

curvature::MetricTensor ansatz_metric(const Expression& a, const Expression& b, const Coordinates& coords,
                                      const sym::DependencyMap* dependencies) {
  curvature::MetricTensor g({coords.begin(), coords.end()});
  const Expression minus_a2 = sym::simplify(-(a * a));
  g.set(0, 0, b);
  g.set(0, 1, sym::differentiate(a, coords[1], dependencies));
  g.set(2, 2, minus_a2);
  g.set(3, 3, minus_a2);
  return g;
}

curvature::MetricTensor build_metric(const AnsatzSolution& sol) {
  curvature::MetricTensor g = ansatz_metric(sol.a, sol.b, sol.coords);
  g.parameters.emplace("Lambda", sol.lambda);
  g.parameters.emplace("m", sol.m);
  return g;
}

AnsatzSolution make_solution(Expression a, Number lambda, Number m, const Coordinates& coords, std::string name) {
  for (const auto& s : sym::free_symbols(a)) {
    if (s != coords[0] && s != coords[1]) {
      throw ValidationError("a may depend only on " + coords[0] + " and " + coords[1] + ", found '" + s + "'");
    }
  }
  if (sym::is_zero_identity(a)) throw ValidationError("a is identically zero");
  if (m.is_negative()) throw ValidationError("m must be >= 0");
  AnsatzSolution sol;
  sol.name = std::move(name);
  sol.coords = coords;
  sol.a = std::move(a);
  sol.lambda = lambda;
  sol.m = m;
  sol.b = derive_b(sol.a, Expression(lambda), Expression(m), coords[0]);
  sol.metric = build_metric(sol);
  return sol;
}

Expression closed_form_r22(const Expression& a, const Expression& b, const Coordinates& coords,
                           const sym::DependencyMap* dependencies) {
  const std::string& t = coords[0];
  const std::string& x = coords[1];
  const Expression a_x = sym::differentiate(a, x, dependencies);
  if (sym::is_zero_identity(a_x)) throw DegenerateError("a_x vanishes identically");
  const Expression a_t = sym::differentiate(a, t, dependencies);
  const Expression a_xt = sym::differentiate(a_x, t, dependencies);
  const Expression b_x = sym::differentiate(b, x, dependencies);
  return sym::simplify((Expression(2) * a * a_xt + Expression(2) * a_x * a_t - b_x * a - a_x * b) *
                       sym::pow(a_x, Expression(-1)));
}

Expression psi2_reference(const Expression& a, const Number& lambda, const Number& m) {
  return sym::simplify(Expression(lambda) * Expression(Number::rational(-1, 9)) +
                       Expression(m) * Expression(Number::rational(1, 6)) * sym::pow(a, Expression(-3)));
}

namespace {

std::string function_symbol(const Coordinates& coords) {
  std::string name = "a";
  while (std::find(coords.begin(), coords.end(), name) != coords.end()) name += "_f";
  return name;
}

}  // namespace

AnsatzCurvature ansatz_curvature(const AnsatzSolution& sol, const sym::ZeroTestOptions& zero_test) {
  AnsatzCurvature out;
  out.function = function_symbol(sol.coords);
  out.dependencies.declare(out.function, {sol.coords[0], sol.coords[1]});
  const Expression f = Expression::symbol(out.function);
  const Expression b = derive_b(f, Expression(sol.lambda), Expression(sol.m), sol.coords[0], &out.dependencies);
  out.generic_metric = ansatz_metric(f, b, sol.coords, &out.dependencies);

  curvature::CurvatureOptions options;
  options.dependencies = &out.dependencies;
  options.expand = true;
  options.zero_test = zero_test;
  out.generic = curvature::compute_curvature(out.generic_metric, options);

  const np::NullTetrad tetrad = np::canonical_tetrad(out.generic_metric, zero_test);
  out.generic_scalars = np::weyl_scalars(out.generic, tetrad);
  for (auto& psi : out.generic_scalars.psi) {
    psi = {sym::simplify(sym::expand(psi.re)), sym::simplify(sym::expand(psi.im))};
  }

  sym::SubstitutionMap realization{{out.function, sol.a}};
  out.concrete = curvature::realize(out.generic, out.dependencies, realization);
  for (std::size_t k = 0; k < 5; ++k) {
    out.scalars.psi[k] = {realize(out, sol, out.generic_scalars.psi[k].re),
                          realize(out, sol, out.generic_scalars.psi[k].im)};
  }
  return out;
}

Expression realize(const AnsatzCurvature& curvature, const AnsatzSolution& sol, const Expression& e) {
  return sym::simplify(sym::realize_functions(e, curvature.dependencies, {{curvature.function, sol.a}}));
}

}  // namespace lambdavac::ansatz
