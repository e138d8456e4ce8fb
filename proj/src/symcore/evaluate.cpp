#include "lambdavac/symcore/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "lambdavac/errors.hpp"

namespace lambdavac::sym {

CompiledExpression::CompiledExpression(const Expression& e) {
  auto symbols = free_symbols(e);
  variables_.assign(symbols.begin(), symbols.end());
  compile(e);
}

CompiledExpression::CompiledExpression(const Expression& e, std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  for (const auto& name : free_symbols(e)) {
    if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) {
      throw UnboundSymbolError(name);
    }
  }
  compile(e);
}

void CompiledExpression::compile(const Expression& e) {
  std::unordered_map<const Node*, std::uint32_t> by_node;
  std::unordered_map<Expression, std::uint32_t, ExpressionHash> by_structure;

  auto emit = [&](const Expression& x, auto&& self) -> std::uint32_t {
    if (auto it = by_node.find(x.id()); it != by_node.end()) return it->second;
    if (auto it = by_structure.find(x); it != by_structure.end()) {
      by_node.emplace(x.id(), it->second);
      return it->second;
    }
    Instruction ins;
    ins.source = x;
    switch (x.kind()) {
      case Kind::kConstant:
        ins.op = Op::kConstant;
        ins.constant = x.number().to_double();
        break;
      case Kind::kSymbol:
        if (x.name() == kPiName) {
          ins.op = Op::kPi;
        } else {
          ins.op = Op::kVariable;
          auto it = std::find(variables_.begin(), variables_.end(), x.name());
          ins.first = static_cast<std::uint32_t>(it - variables_.begin());
        }
        break;
      case Kind::kSum:
      case Kind::kProduct: {
        std::vector<std::uint32_t> children;
        for (const auto& a : x.args()) children.push_back(self(a, self));
        ins.op = x.kind() == Kind::kSum ? Op::kAdd : Op::kMul;
        ins.first = static_cast<std::uint32_t>(operands_.size());
        ins.count = static_cast<std::uint32_t>(children.size());
        operands_.insert(operands_.end(), children.begin(), children.end());
        break;
      }
      case Kind::kPower: {
        std::uint32_t base = self(x.args()[0], self);
        const Number& n = x.exponent();
        ins.op = n.is_integer() ? Op::kPowInt : Op::kPowReal;
        ins.first = base;
        ins.constant = n.to_double();
        break;
      }
      case Kind::kSin:
      case Kind::kCos:
        ins.op = x.kind() == Kind::kSin ? Op::kSin : Op::kCos;
        ins.first = self(x.args()[0], self);
        break;
    }
    auto index = static_cast<std::uint32_t>(program_.size());
    program_.push_back(std::move(ins));
    by_node.emplace(x.id(), index);
    by_structure.emplace(x, index);
    return index;
  };
  emit(e, emit);
}

namespace {

double int_power(double base, double exponent) {
  auto n = static_cast<long long>(exponent);
  bool invert = n < 0;
  if (invert) n = -n;
  double result = 1.0;
  double b = base;
  while (n > 0) {
    if (n & 1) result *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return invert ? 1.0 / result : result;
}

}  // namespace

CompiledExpression::Outcome CompiledExpression::run(std::span<const double> values,
                                                    std::vector<double>& scratch) const {
  scratch.resize(program_.size());
  Outcome out;
  double max_magnitude = 0.0;
  for (std::size_t i = 0; i < program_.size(); ++i) {
    const Instruction& ins = program_[i];
    double v = 0.0;
    switch (ins.op) {
      case Op::kConstant:
        v = ins.constant;
        break;
      case Op::kVariable:
        v = values[ins.first];
        break;
      case Op::kPi:
        v = std::numbers::pi;
        break;
      case Op::kAdd:
        for (std::uint32_t k = 0; k < ins.count; ++k) v += scratch[operands_[ins.first + k]];
        break;
      case Op::kMul:
        v = 1.0;
        for (std::uint32_t k = 0; k < ins.count; ++k) v *= scratch[operands_[ins.first + k]];
        break;
      case Op::kPowInt:
        v = int_power(scratch[ins.first], ins.constant);
        break;
      case Op::kPowReal:
        v = std::pow(scratch[ins.first], ins.constant);
        break;
      case Op::kSin:
        v = std::sin(scratch[ins.first]);
        break;
      case Op::kCos:
        v = std::cos(scratch[ins.first]);
        break;
    }
    if (!std::isfinite(v)) {
      out.failed = i;
      out.value = v;
      out.max_magnitude = max_magnitude;
      return out;
    }
    scratch[i] = v;
    max_magnitude = std::max(max_magnitude, std::abs(v));
  }
  out.value = program_.empty() ? 0.0 : scratch.back();
  out.max_magnitude = max_magnitude;
  return out;
}

double CompiledExpression::operator()(std::span<const double> values) const {
  std::vector<double> scratch;
  Outcome out = run(values, scratch);
  if (!out.ok()) {
    const Expression& offending = program_[*out.failed].source;
    throw DomainError("non-finite value at " + to_string(offending), offending);
  }
  return out.value;
}

double evaluate(const Expression& e, const Binding& binding) {
  CompiledExpression compiled(e);
  std::vector<double> values;
  values.reserve(compiled.variables().size());
  for (const auto& name : compiled.variables()) {
    auto it = binding.find(name);
    if (it == binding.end()) throw UnboundSymbolError(name);
    values.push_back(it->second);
  }
  return compiled(values);
}

}  // namespace lambdavac::sym
