#include "lambdavac/ansatz/catalog.hpp"

#include <algorithm>

#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/calculus.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::ansatz {

using sym::Expression;
using sym::Number;

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"space_periodic", "2 + cos(x)", Constraint::kNone, "static, x-periodic; chart-degenerate where sin x = 0"},
      {"regular_periodic", "(2 + cos(x))*(2 + sin(Lambda*t/6))", Constraint::kNone,
       "periodic in t and x with bounded curvature"},
      {"singular_periodic", "cos(x)*sin(Lambda*t/6)", Constraint::kLambdaNonzero,
       "curvature diverges where cos x = 0 or sin(Lambda t/6) = 0"},
      {"conformal_flat", "2/(x + sin(t))", Constraint::kMassZero, "m = 0: conformal to Minkowski space"},
      {"lambda_zero", "2 + cos(x)", Constraint::kLambdaZero, "Ricci-flat member (Lambda = 0)"},
  };
  return entries;
}

std::string_view describe(Constraint constraint) {
  switch (constraint) {
    case Constraint::kLambdaNonzero:
      return "Lambda != 0";
    case Constraint::kMassZero:
      return "m = 0";
    case Constraint::kLambdaZero:
      return "Lambda = 0";
    case Constraint::kNone:
      break;
  }
  return "none";
}

namespace {

const CatalogEntry& find_entry(std::string_view name) {
  const auto& entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) {
    std::string known;
    for (const auto& e : entries) known += (known.empty() ? "" : ", ") + std::string(e.name);
    throw CatalogError("unknown builtin '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

}  // namespace

AnsatzSolution builtin(std::string_view name, const Number& lambda, const Number& m) {
  const CatalogEntry& entry = find_entry(name);
  const std::string label(entry.name);
  switch (entry.constraint) {
    case Constraint::kLambdaNonzero:
      if (lambda.is_zero()) throw CatalogError(label + " requires Lambda != 0");
      break;
    case Constraint::kMassZero:
      if (!m.is_zero()) throw CatalogError(label + " requires m = 0");
      break;
    case Constraint::kLambdaZero:
      if (!lambda.is_zero()) throw CatalogError(label + " requires Lambda = 0");
      break;
    case Constraint::kNone:
      break;
  }
  if (m.is_negative()) throw CatalogError("m must be >= 0");
  Expression a = sym::substitute(metriclang::parse_expression(entry.a), "Lambda", Expression(lambda));
  return make_solution(sym::simplify(a), lambda, m, kDefaultCoordinates, label);
}

std::pair<Number, Number> project_parameters(std::string_view name, const Number& lambda, const Number& m) {
  switch (find_entry(name).constraint) {
    case Constraint::kMassZero:
      return {lambda, Number(0)};
    case Constraint::kLambdaZero:
      return {Number(0), m};
    default:
      return {lambda, m};
  }
}

}  // namespace lambdavac::ansatz
