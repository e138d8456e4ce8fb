#include "lambdavac/symcore/calculus.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::sym {

void DependencyMap::declare(std::string function, std::vector<std::string> arguments) {
  if (arguments.empty()) throw std::invalid_argument("function '" + function + "' needs arguments");
  functions_[std::move(function)] = std::move(arguments);
}

std::optional<DependencyMap::Jet> DependencyMap::decode(std::string_view symbol) const {
  for (const auto& [function, arguments] : functions_) {
    if (symbol == function) return Jet{function, {}};
    if (symbol.size() <= function.size() + 1 || symbol.substr(0, function.size()) != function ||
        symbol[function.size()] != '_') {
      continue;
    }
    std::string_view rest = symbol.substr(function.size() + 1);
    Jet jet{function, {}};
    for (const auto& argument : arguments) {
      while (rest.substr(0, argument.size()) == argument) {
        jet.derivatives.push_back(argument);
        rest.remove_prefix(argument.size());
      }
    }
    if (rest.empty()) return jet;
  }
  return std::nullopt;
}

std::string DependencyMap::jet_name(const std::string& function, std::vector<std::string> derivatives) const {
  auto it = functions_.find(function);
  if (it == functions_.end()) throw std::invalid_argument("undeclared function '" + function + "'");
  const auto& arguments = it->second;
  auto rank = [&](const std::string& v) {
    return std::find(arguments.begin(), arguments.end(), v) - arguments.begin();
  };
  std::sort(derivatives.begin(), derivatives.end(),
            [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
  if (derivatives.empty()) return function;
  std::string name = function + "_";
  for (const auto& d : derivatives) name += d;
  return name;
}

std::optional<Expression> DependencyMap::derivative(std::string_view symbol, std::string_view variable) const {
  auto jet = decode(symbol);
  if (!jet) return std::nullopt;
  const auto& arguments = functions_.find(jet->function)->second;
  if (std::find(arguments.begin(), arguments.end(), variable) == arguments.end()) return Expression(0);
  jet->derivatives.emplace_back(variable);
  return Expression::symbol(jet_name(jet->function, std::move(jet->derivatives)));
}

Expression differentiate(const Expression& e, std::string_view variable, const DependencyMap* dependencies) {
  const bool plain = dependencies == nullptr || dependencies->empty();
  const std::uint64_t bit = symbol_bit(variable);
  std::unordered_map<const Node*, Expression> memo;

  auto d = [&](const Expression& x, auto&& self) -> Expression {
    if (plain && (x.symbol_mask() & bit) == 0) return Expression(0);
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Expression result;
    switch (x.kind()) {
      case Kind::kConstant:
        result = Expression(0);
        break;
      case Kind::kSymbol:
        if (x.name() == variable) {
          result = Expression(1);
        } else if (!plain) {
          result = dependencies->derivative(x.name(), variable).value_or(Expression(0));
        } else {
          result = Expression(0);
        }
        break;
      case Kind::kSum: {
        std::vector<Expression> terms;
        for (const auto& term : x.args()) terms.push_back(self(term, self));
        result = add(std::move(terms));
        break;
      }
      case Kind::kProduct: {
        auto factors = x.args();
        std::vector<Expression> terms;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          Expression df = self(factors[i], self);
          if (df.is_zero()) continue;
          std::vector<Expression> product(factors.begin(), factors.end());
          product[i] = df;
          terms.push_back(mul(std::move(product)));
        }
        result = add(std::move(terms));
        break;
      }
      case Kind::kPower: {
        const Expression& base = x.args()[0];
        const Number& n = x.exponent();
        Expression db = self(base, self);
        result = db.is_zero() ? Expression(0)
                              : mul({Expression(n), pow(base, Expression(n - Number(1))), db});
        break;
      }
      case Kind::kSin: {
        Expression du = self(x.args()[0], self);
        result = du.is_zero() ? Expression(0) : mul({cos(x.args()[0]), du});
        break;
      }
      case Kind::kCos: {
        Expression du = self(x.args()[0], self);
        result = du.is_zero() ? Expression(0) : mul({Expression(-1), sin(x.args()[0]), du});
        break;
      }
    }
    memo.emplace(x.id(), result);
    return result;
  };
  return d(e, d);
}

Expression substitute(const Expression& e, const SubstitutionMap& replacements) {
  if (replacements.empty()) return e;
  std::uint64_t mask = 0;
  for (const auto& [name, _] : replacements) mask |= symbol_bit(name);
  std::unordered_map<const Node*, Expression> memo;

  auto s = [&](const Expression& x, auto&& self) -> Expression {
    if ((x.symbol_mask() & mask) == 0) return x;
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Expression result;
    switch (x.kind()) {
      case Kind::kConstant:
        result = x;
        break;
      case Kind::kSymbol: {
        auto it = replacements.find(x.name());
        result = it == replacements.end() ? x : it->second;
        break;
      }
      case Kind::kSum:
      case Kind::kProduct: {
        std::vector<Expression> args;
        for (const auto& a : x.args()) args.push_back(self(a, self));
        result = x.kind() == Kind::kSum ? add(std::move(args)) : mul(std::move(args));
        break;
      }
      case Kind::kPower:
        result = pow(self(x.args()[0], self), x.args()[1]);
        break;
      case Kind::kSin:
        result = sin(self(x.args()[0], self));
        break;
      case Kind::kCos:
        result = cos(self(x.args()[0], self));
        break;
    }
    memo.emplace(x.id(), result);
    return result;
  };
  return s(e, s);
}

Expression substitute(const Expression& e, std::string_view symbol, const Expression& replacement) {
  SubstitutionMap map;
  map.emplace(std::string(symbol), replacement);
  return substitute(e, map);
}

SubstitutionMap jet_realization(const std::set<std::string>& symbols, const DependencyMap& dependencies,
                                const SubstitutionMap& realizations) {
  SubstitutionMap map;
  for (const auto& name : symbols) {
    auto jet = dependencies.decode(name);
    if (!jet) continue;
    auto concrete = realizations.find(jet->function);
    if (concrete == realizations.end()) continue;
    Expression value = concrete->second;
    for (const auto& v : jet->derivatives) value = differentiate(value, v);
    map.emplace(name, simplify(value));
  }
  return map;
}

Expression realize_functions(const Expression& e, const DependencyMap& dependencies,
                             const SubstitutionMap& realizations) {
  return substitute(e, jet_realization(free_symbols(e), dependencies, realizations));
}

}  // namespace lambdavac::sym
