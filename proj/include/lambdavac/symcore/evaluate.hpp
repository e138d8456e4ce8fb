#ifndef LAMBDAVAC_SYMCORE_EVALUATE_HPP
#define LAMBDAVAC_SYMCORE_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::sym {

using Binding = std::map<std::string, double, std::less<>>;

/// Recursive IEEE evaluation. Throws UnboundSymbolError for a free symbol
/// missing from `binding` and DomainError when a subexpression is not finite.
double evaluate(const Expression& e, const Binding& binding);

/// Expression flattened into a straight-line program over a fixed variable
/// order. Shared and structurally repeated subtrees are evaluated once.
class CompiledExpression {
 public:
  CompiledExpression() = default;
  /// Variables are the sorted free symbols of `e`.
  explicit CompiledExpression(const Expression& e);
  /// Throws UnboundSymbolError if `e` has a free symbol not in `variables`.
  CompiledExpression(const Expression& e, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t instruction_count() const { return program_.size(); }

  struct Outcome {
    double value = 0.0;
    /// Largest |intermediate| seen, including the result.
    double max_magnitude = 0.0;
    /// Offending instruction when a value was not finite.
    std::optional<std::size_t> failed;
    bool ok() const { return !failed.has_value(); }
  };

  /// `values` follows variables(); `scratch` is reused across calls.
  Outcome run(std::span<const double> values, std::vector<double>& scratch) const;
  /// Throws DomainError on failure.
  double operator()(std::span<const double> values) const;
  /// Subexpression behind a failed instruction.
  const Expression& source(std::size_t instruction) const { return program_[instruction].source; }

 private:
  enum class Op : std::uint8_t { kConstant, kVariable, kPi, kAdd, kMul, kPowInt, kPowReal, kSin, kCos };
  struct Instruction {
    Op op = Op::kConstant;
    std::uint32_t first = 0;  // variable slot, or start in operands_
    std::uint32_t count = 0;
    double constant = 0.0;
    Expression source;
  };
  void compile(const Expression& e);

  std::vector<std::string> variables_;
  std::vector<Instruction> program_;
  std::vector<std::uint32_t> operands_;
};

}  // namespace lambdavac::sym

#endif  // LAMBDAVAC_SYMCORE_EVALUATE_HPP
