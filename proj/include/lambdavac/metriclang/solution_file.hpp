#ifndef LAMBDAVAC_METRICLANG_SOLUTION_FILE_HPP
#define LAMBDAVAC_METRICLANG_SOLUTION_FILE_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::metriclang {

/// Ansatz of the form
///   g00 = 2 a_t + Lambda a^2/3 + m/a,  g01 = a_x,  g22 = g33 = -a^2
/// generated by a(t, x).
struct AnsatzMode {
  sym::Expression a;
  sym::Number lambda;
  sym::Number m;
};

/// Ten upper-triangle components, row-major: (0,0) (0,1) (0,2) (0,3) (1,1) ...
struct ExplicitMode {
  std::array<sym::Expression, 10> components;
};

struct SolutionSpec {
  std::array<std::string, 4> coords{"t", "x", "y", "z"};
  /// `param` lines sorted by name; values are substituted into
  /// every expression of the file.
  std::map<std::string, sym::Number, std::less<>> params;
  std::variant<AnsatzMode, ExplicitMode> mode;
  std::vector<std::string> warnings;

  bool is_ansatz() const { return std::holds_alternative<AnsatzMode>(mode); }
};

using ParamOverrides = std::map<std::string, sym::Number, std::less<>>;

/// Index of (i, j), i <= j, into ExplicitMode::components.
std::size_t upper_index(std::size_t i, std::size_t j);

/// Parses the line-oriented `.metric` format:
///
///   # comment
///   coords t x y z
///   param Lambda = 1
///   param m = 1
///   a = 2 + cos(x)              (ansatz mode)
///   g 0 0 = 1                   (explicit mode, ten upper-triangle lines)
///
/// LF and CRLF line endings are accepted. Errors are ValidationError (or
/// SyntaxError for a malformed expression) with a "line N" prefix.
/// `overrides` replace (or add) parameter values before they are bound.
SolutionSpec parse_solution_file(std::string_view text, const ParamOverrides& overrides = {});

/// Canonical `.metric` rendering of a spec; parses back to an equal spec.
std::string serialize_solution(const SolutionSpec& spec);

}  // namespace lambdavac::metriclang

#endif  // LAMBDAVAC_METRICLANG_SOLUTION_FILE_HPP
