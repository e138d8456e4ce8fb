#include "lambdavac/symcore/expression.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "node.hpp"

namespace lambdavac::sym {
namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const Expression& zero_expression() {
  static const Expression zero{Number(0)};
  return zero;
}

const Expression& one_expression() {
  static const Expression one{Number(1)};
  return one;
}

bool has_coefficient(const Expression& e) {
  return e.kind() == Kind::kProduct && e.args().front().is_constant();
}

// Factor view of a non-constant term: product factors minus the coefficient.
std::span<const Expression> factor_view(const Expression& e) {
  if (e.kind() == Kind::kProduct) {
    auto args = e.args();
    return has_coefficient(e) ? args.subspan(1) : args;
  }
  return std::span<const Expression>(&e, 1);
}

Number coefficient_of(const Expression& e) {
  return has_coefficient(e) ? e.args().front().number() : Number(1);
}

int compare_plain(const Expression& a, const Expression& b);

int compare_lists(std::span<const Expression> a, std::span<const Expression> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int order_of(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

// Powers compare by base first so x < x^2 < y.
int compare_plain(const Expression& a, const Expression& b) {
  if (a.kind() == Kind::kPower || b.kind() == Kind::kPower) {
    const Expression& base_a = a.kind() == Kind::kPower ? a.args()[0] : a;
    const Expression& base_b = b.kind() == Kind::kPower ? b.args()[0] : b;
    if (a.kind() == Kind::kPower && b.kind() == Kind::kPower) {
      if (int c = compare(base_a, base_b); c != 0) return c;
    } else if (a.kind() == Kind::kPower) {
      if (int c = compare(base_a, b); c != 0) return c;
    } else {
      if (int c = compare(a, base_b); c != 0) return c;
    }
    Number exp_a = a.kind() == Kind::kPower ? a.exponent() : Number(1);
    Number exp_b = b.kind() == Kind::kPower ? b.exponent() : Number(1);
    return order_of(sym::compare(exp_a, exp_b));
  }
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::kSymbol:
      return a.name() < b.name() ? -1 : (a.name() == b.name() ? 0 : 1);
    case Kind::kSum:
      return compare_lists(a.args(), b.args());
    case Kind::kSin:
    case Kind::kCos:
      return compare(a.args()[0], b.args()[0]);
    default:
      return 0;
  }
}

}  // namespace

std::uint64_t symbol_bit(std::string_view name) {
  return std::uint64_t{1} << (std::hash<std::string_view>{}(name) % 64);
}

Expression make_node(Kind kind, Number value, std::string name, std::vector<Expression> args) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = std::hash<int>{}(static_cast<int>(kind) + 1);
  std::uint64_t mask = 0;
  switch (kind) {
    case Kind::kConstant:
      h = mix(h, value.hash());
      break;
    case Kind::kSymbol:
      h = mix(h, std::hash<std::string>{}(name));
      if (name != kPiName) mask = symbol_bit(name);
      break;
    default:
      for (const auto& arg : args) {
        h = mix(h, arg.hash());
        mask |= arg.symbol_mask();
      }
      break;
  }
  node->value = std::move(value);
  node->name = std::move(name);
  node->args = std::move(args);
  node->hash = h;
  node->mask = mask;
  return Expression(std::shared_ptr<const Node>(std::move(node)));
}

Expression::Expression() : Expression(zero_expression()) {}

Expression::Expression(const Number& value) : node_(make_node(Kind::kConstant, value, {}, {}).node_) {}
Expression::Expression(int value) : Expression(Number(value)) {}
Expression::Expression(std::int64_t value) : Expression(Number(value)) {}

Expression Expression::symbol(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  return make_node(Kind::kSymbol, Number(0), std::move(name), {});
}

Kind Expression::kind() const { return node_->kind; }
const Number& Expression::number() const { return node_->value; }
const std::string& Expression::name() const { return node_->name; }
std::span<const Expression> Expression::args() const { return node_->args; }
const Number& Expression::exponent() const { return node_->args[1].number(); }
std::size_t Expression::hash() const { return node_->hash; }
std::uint64_t Expression::symbol_mask() const { return node_->mask; }

bool Expression::is_zero() const { return is_constant() && number().is_zero() && number().is_exact(); }
bool Expression::is_one() const { return is_constant() && number().is_one() && number().is_exact(); }

bool Expression::depends_on(std::string_view symbol) const {
  if ((symbol_mask() & symbol_bit(symbol)) == 0) return false;
  if (kind() == Kind::kSymbol) return name() == symbol;
  for (const auto& arg : args()) {
    if (arg.depends_on(symbol)) return true;
  }
  return false;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.id() == b.id()) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

int compare(const Expression& a, const Expression& b) {
  if (a.id() == b.id()) return 0;
  const bool const_a = a.is_constant();
  const bool const_b = b.is_constant();
  if (const_a || const_b) {
    if (const_a && const_b) return order_of(sym::compare(a.number(), b.number()));
    return const_a ? -1 : 1;
  }
  if (a.kind() == Kind::kProduct || b.kind() == Kind::kProduct) {
    if (int c = compare_lists(factor_view(a), factor_view(b)); c != 0) return c;
    return order_of(sym::compare(coefficient_of(a), coefficient_of(b)));
  }
  return compare_plain(a, b);
}

std::pair<Number, Expression> split_coefficient(const Expression& term) {
  if (term.is_constant()) return {term.number(), one_expression()};
  if (!has_coefficient(term)) return {Number(1), term};
  auto args = term.args();
  if (args.size() == 2) return {args[0].number(), args[1]};
  return {args[0].number(),
          make_node(Kind::kProduct, Number(0), {}, std::vector<Expression>(args.begin() + 1, args.end()))};
}

namespace {

// coefficient * core without re-canonicalizing core.
Expression scale_core(const Number& coefficient, const Expression& core) {
  if (coefficient.is_one()) return core;
  std::vector<Expression> args;
  args.emplace_back(coefficient);
  if (core.kind() == Kind::kProduct) {
    args.insert(args.end(), core.args().begin(), core.args().end());
  } else {
    args.push_back(core);
  }
  return make_node(Kind::kProduct, Number(0), {}, std::move(args));
}

bool is_negative_term(const Expression& e) {
  if (e.is_constant()) return e.number().is_negative();
  return has_coefficient(e) && e.args().front().number().is_negative();
}

}  // namespace

Expression add(std::vector<Expression> terms) {
  Number constant(0);
  std::vector<std::pair<Expression, Number>> cores;
  std::unordered_map<Expression, std::size_t, ExpressionHash> index;

  auto absorb = [&](const Expression& term, auto&& self) -> void {
    if (term.kind() == Kind::kSum) {
      for (const auto& sub : term.args()) self(sub, self);
      return;
    }
    if (term.is_constant()) {
      constant = constant + term.number();
      return;
    }
    auto [coefficient, core] = split_coefficient(term);
    auto [it, inserted] = index.try_emplace(core, cores.size());
    if (inserted) {
      cores.emplace_back(core, coefficient);
    } else {
      cores[it->second].second = cores[it->second].second + coefficient;
    }
  };
  for (const auto& term : terms) absorb(term, absorb);

  std::vector<Expression> result;
  result.reserve(cores.size() + 1);
  for (auto& [core, coefficient] : cores) {
    if (coefficient.is_zero()) continue;
    result.push_back(scale_core(coefficient, core));
  }
  if (!constant.is_zero()) result.emplace_back(constant);
  if (result.empty()) return Expression(constant);
  if (result.size() == 1) return result.front();
  std::sort(result.begin(), result.end(), [](const Expression& a, const Expression& b) { return compare(a, b) < 0; });
  return make_node(Kind::kSum, Number(0), {}, std::move(result));
}

Expression mul(std::vector<Expression> factors) {
  Number coefficient(1);
  bool zero = false;
  std::vector<std::pair<Expression, Number>> bases;
  std::unordered_map<Expression, std::size_t, ExpressionHash> index;

  auto add_base = [&](const Expression& base, const Number& exponent) {
    auto [it, inserted] = index.try_emplace(base, bases.size());
    if (inserted) {
      bases.emplace_back(base, exponent);
    } else {
      bases[it->second].second = bases[it->second].second + exponent;
    }
  };
  auto absorb = [&](const Expression& factor, auto&& self) -> void {
    switch (factor.kind()) {
      case Kind::kProduct:
        for (const auto& sub : factor.args()) self(sub, self);
        return;
      case Kind::kConstant:
        if (factor.number().is_zero()) zero = true;
        coefficient = coefficient * factor.number();
        return;
      case Kind::kPower:
        add_base(factor.args()[0], factor.exponent());
        return;
      default:
        add_base(factor, Number(1));
        return;
    }
  };
  for (const auto& factor : factors) absorb(factor, absorb);
  if (zero) return Expression(Number(0));

  std::vector<Expression> result;
  bool reabsorb = false;
  for (auto& [base, exponent] : bases) {
    if (exponent.is_zero()) continue;
    Expression p = pow(base, Expression(exponent));
    if (p.is_constant()) {
      coefficient = coefficient * p.number();
    } else {
      if (p.kind() == Kind::kProduct) reabsorb = true;
      result.push_back(std::move(p));
    }
  }
  if (reabsorb) {
    result.emplace_back(coefficient);
    return mul(std::move(result));
  }
  if (coefficient.is_zero()) return Expression(Number(0));
  if (result.empty()) return Expression(coefficient);
  std::sort(result.begin(), result.end(), [](const Expression& a, const Expression& b) { return compare(a, b) < 0; });
  if (coefficient.is_one() && result.size() == 1) return result.front();
  if (!coefficient.is_one()) result.insert(result.begin(), Expression(coefficient));
  return make_node(Kind::kProduct, Number(0), {}, std::move(result));
}

Expression pow(const Expression& base, const Expression& exponent) {
  if (!exponent.is_constant()) {
    throw std::invalid_argument("exponent must be a numeric constant, got " + to_string(exponent));
  }
  const Number& e = exponent.number();
  if (e.is_zero()) return Expression(1);
  if (e.is_one()) return base;
  if (base.is_zero() && e.is_negative()) throw std::domain_error("division by zero");
  if (base.is_constant()) {
    if (auto folded = base.number().pow(e)) return Expression(*folded);
    return make_node(Kind::kPower, Number(0), {}, {base, exponent});
  }
  if (e.is_integer()) {
    if (base.kind() == Kind::kPower) return pow(base.args()[0], Expression(base.exponent() * e));
    if (base.kind() == Kind::kProduct) {
      std::vector<Expression> factors;
      factors.reserve(base.args().size());
      for (const auto& f : base.args()) factors.push_back(pow(f, exponent));
      return mul(std::move(factors));
    }
  }
  return make_node(Kind::kPower, Number(0), {}, {base, exponent});
}

Expression sin(const Expression& arg) {
  if (arg.is_zero()) return Expression(0);
  if (is_negative_term(arg)) return -sin(-arg);
  return make_node(Kind::kSin, Number(0), {}, {arg});
}

Expression cos(const Expression& arg) {
  if (arg.is_zero()) return Expression(1);
  if (is_negative_term(arg)) return cos(-arg);
  return make_node(Kind::kCos, Number(0), {}, {arg});
}

Expression operator+(const Expression& a, const Expression& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return add({a, b});
}
Expression operator-(const Expression& a, const Expression& b) {
  if (b.is_zero()) return a;
  return add({a, -b});
}
Expression operator-(const Expression& a) { return mul({Expression(-1), a}); }
Expression operator*(const Expression& a, const Expression& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return mul({a, b});
}
Expression operator/(const Expression& a, const Expression& b) { return mul({a, pow(b, Expression(-1))}); }
Expression& operator+=(Expression& a, const Expression& b) { return a = a + b; }
Expression& operator-=(Expression& a, const Expression& b) { return a = a - b; }
Expression& operator*=(Expression& a, const Expression& b) { return a = a * b; }

std::set<std::string> free_symbols(const Expression& e) {
  std::set<std::string> out;
  std::unordered_set<const Node*> seen;
  auto visit = [&](const Expression& x, auto&& self) -> void {
    if (!seen.insert(x.id()).second) return;
    if (x.kind() == Kind::kSymbol) {
      if (x.name() != kPiName) out.insert(x.name());
      return;
    }
    for (const auto& arg : x.args()) self(arg, self);
  };
  visit(e, visit);
  return out;
}

std::size_t dag_size(const Expression& e) {
  std::unordered_set<const Node*> seen;
  auto visit = [&](const Expression& x, auto&& self) -> void {
    if (!seen.insert(x.id()).second) return;
    for (const auto& arg : x.args()) self(arg, self);
  };
  visit(e, visit);
  return seen.size();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Precedence { kPrecSum = 1, kPrecProduct = 2, kPrecPower = 3, kPrecAtom = 4 };

std::string print(const Expression& e, int parent);

std::string print_constant(const Number& n, int parent) {
  std::string s = n.to_string();
  const bool compound = n.is_negative() || (n.is_exact() && n.denominator() != 1);
  if (compound && parent >= kPrecProduct) return "(" + s + ")";
  return s;
}

bool is_atomic(const Expression& e) {
  switch (e.kind()) {
    case Kind::kSymbol:
    case Kind::kSin:
    case Kind::kCos:
      return true;
    case Kind::kConstant:
      return !e.number().is_negative() && e.number().is_exact() && e.number().denominator() == 1;
    default:
      return false;
  }
}

std::string print_product(const Number& coefficient, std::span<const Expression> factors, int parent) {
  std::vector<std::string> numerator;
  std::vector<std::string> denominator;
  const Number magnitude = coefficient.abs();
  if (!magnitude.is_exact()) {
    numerator.push_back(magnitude.to_string());
  } else {
    if (magnitude.numerator() != 1) numerator.push_back(std::to_string(magnitude.numerator()));
    if (magnitude.denominator() != 1) denominator.push_back(std::to_string(magnitude.denominator()));
  }
  std::vector<Expression> den_factors;
  for (const auto& f : factors) {
    if (f.kind() == Kind::kPower && f.exponent().is_negative()) {
      den_factors.push_back(pow(f.args()[0], Expression(-f.exponent())));
    } else {
      numerator.push_back(print(f, kPrecProduct));
    }
  }
  const std::size_t den_count = denominator.size() + den_factors.size();
  for (const auto& f : den_factors) {
    denominator.push_back(print(f, den_count == 1 ? kPrecPower : kPrecProduct));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
    return out;
  };
  std::string s = numerator.empty() ? "1" : join(numerator);
  if (den_count == 1) {
    s += "/" + denominator.front();
  } else if (den_count > 1) {
    s += "/(" + join(denominator) + ")";
  }
  if (coefficient.is_negative()) s = "-" + s;
  const bool wrap = parent > kPrecProduct || (coefficient.is_negative() && parent >= kPrecProduct);
  return wrap ? "(" + s + ")" : s;
}

std::string print(const Expression& e, int parent) {
  switch (e.kind()) {
    case Kind::kConstant:
      return print_constant(e.number(), parent);
    case Kind::kSymbol:
      return e.name();
    case Kind::kSin:
      return "sin(" + print(e.args()[0], 0) + ")";
    case Kind::kCos:
      return "cos(" + print(e.args()[0], 0) + ")";
    case Kind::kSum: {
      std::string s;
      bool first = true;
      for (const auto& term : e.args()) {
        if (first) {
          s += print(term, kPrecSum);
          first = false;
        } else if (is_negative_term(term)) {
          const Expression negated = -term;
          s += " - " + (negated.kind() == Kind::kSum ? "(" + print(negated, 0) + ")" : print(negated, kPrecSum));
        } else {
          s += " + " + print(term, kPrecSum);
        }
      }
      return parent > kPrecSum ? "(" + s + ")" : s;
    }
    case Kind::kProduct: {
      const bool coef = has_coefficient(e);
      return print_product(coef ? e.args().front().number() : Number(1), factor_view(e), parent);
    }
    case Kind::kPower: {
      if (e.exponent().is_negative()) return print_product(Number(1), std::span<const Expression>(&e, 1), parent);
      const Expression& base = e.args()[0];
      std::string b = is_atomic(base) ? print(base, kPrecAtom) : "(" + print(base, 0) + ")";
      const Number& x = e.exponent();
      std::string ex = (x.is_exact() && x.denominator() == 1) ? x.to_string() : "(" + x.to_string() + ")";
      return b + "^" + ex;
    }
  }
  return {};
}

}  // namespace

std::string to_string(const Expression& e) { return print(e, 0); }
std::ostream& operator<<(std::ostream& out, const Expression& e) { return out << print(e, 0); }

}  // namespace lambdavac::sym
