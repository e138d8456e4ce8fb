#ifndef LAMBDAVAC_SYMCORE_CALCULUS_HPP
#define LAMBDAVAC_SYMCORE_CALCULUS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::sym {

using SubstitutionMap = std::map<std::string, Expression, std::less<>>;

/// Declares symbols that stand for unspecified functions of other symbols.
///
/// A declared function `a(t, x)` is an ordinary symbol `a`; its partial
/// derivatives are fresh symbols named by appending the differentiation
/// variables in argument order (`a_t`, `a_x`, `a_tx`, `a_ttx`, ...), so mixed
/// partials commute by construction. Multi-character argument names are
/// appended verbatim, which is unambiguous as long as no argument name is a
/// prefix of another.
class DependencyMap {
 public:
  void declare(std::string function, std::vector<std::string> arguments);
  bool empty() const { return functions_.empty(); }

  struct Jet {
    std::string function;
    std::vector<std::string> derivatives;  // sorted by argument order
  };
  /// Decodes a symbol name into (function, derivative multiset) if it names
  /// a declared function or one of its derivatives.
  std::optional<Jet> decode(std::string_view symbol) const;
  std::string jet_name(const std::string& function, std::vector<std::string> derivatives) const;

  /// d(symbol)/d(variable); nullopt when symbol is not a declared jet.
  std::optional<Expression> derivative(std::string_view symbol, std::string_view variable) const;

  const std::map<std::string, std::vector<std::string>, std::less<>>& functions() const { return functions_; }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> functions_;
};

/// Exact partial derivative. Symbols declared in `dependencies` are
/// differentiated into their jet symbols; every other symbol is independent.
Expression differentiate(const Expression& e, std::string_view variable,
                         const DependencyMap* dependencies = nullptr);

/// Simultaneous replacement of symbols.
Expression substitute(const Expression& e, const SubstitutionMap& replacements);
Expression substitute(const Expression& e, std::string_view symbol, const Expression& replacement);

/// Replaces each declared-function jet symbol in `e` by the matching
/// derivative of the concrete function given in `realizations`.
Expression realize_functions(const Expression& e, const DependencyMap& dependencies,
                             const SubstitutionMap& realizations);

/// Substitution map that realizes every jet symbol occurring in `symbols`.
SubstitutionMap jet_realization(const std::set<std::string>& symbols, const DependencyMap& dependencies,
                                const SubstitutionMap& realizations);

}  // namespace lambdavac::sym

#endif  // LAMBDAVAC_SYMCORE_CALCULUS_HPP
