#include "lambdavac/symcore/simplify.hpp"

#include <unordered_map>

namespace lambdavac::sym {
namespace {

std::span<const Expression> term_factors(const Expression& core) {
  if (core.kind() == Kind::kProduct) return core.args();
  return std::span<const Expression>(&core, 1);
}

// Merges one c*R*sin(u)^k + c*R*sin(u)^(k-2)*cos(u)^2 pair; nullopt if none.
std::optional<Expression> merge_pythagorean_pair(const Expression& sum) {
  auto terms = sum.args();
  std::unordered_map<Expression, std::pair<Number, std::size_t>, ExpressionHash> cores;
  std::vector<std::pair<Number, Expression>> split;
  split.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    split.push_back(split_coefficient(terms[i]));
    cores.emplace(split.back().second, std::make_pair(split.back().first, i));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [coefficient, core] = split[i];
    if (core.is_constant()) continue;
    for (const auto& factor : term_factors(core)) {
      if (factor.kind() != Kind::kPower || factor.args()[0].kind() != Kind::kSin) continue;
      const Number& k = factor.exponent();
      if (!k.is_integer() || compare(k, Number(2)) == std::strong_ordering::less) continue;
      const Expression& u = factor.args()[0].args()[0];
      Expression rest = mul({core, pow(sin(u), Expression(-2))});
      Expression partner = mul({rest, pow(cos(u), Expression(2))});
      auto it = cores.find(partner);
      if (it == cores.end() || it->second.second == i || !(it->second.first == coefficient)) continue;
      std::vector<Expression> out;
      out.reserve(terms.size() - 1);
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j != i && j != it->second.second) out.push_back(terms[j]);
      }
      out.push_back(mul({Expression(coefficient), rest}));
      return add(std::move(out));
    }
  }
  return std::nullopt;
}

Expression reduce_pythagorean(Expression e) {
  while (e.kind() == Kind::kSum) {
    auto merged = merge_pythagorean_pair(e);
    if (!merged) break;
    e = std::move(*merged);
  }
  return e;
}

Expression distribute(const Expression& a, const Expression& b) {
  auto ta = a.kind() == Kind::kSum ? a.args() : std::span<const Expression>(&a, 1);
  auto tb = b.kind() == Kind::kSum ? b.args() : std::span<const Expression>(&b, 1);
  std::vector<Expression> terms;
  terms.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) terms.push_back(mul({x, y}));
  }
  return add(std::move(terms));
}

}  // namespace

Expression simplify(const Expression& e) {
  std::unordered_map<const Node*, Expression> memo;
  auto s = [&](const Expression& x, auto&& self) -> Expression {
    if (x.kind() == Kind::kConstant || x.kind() == Kind::kSymbol) return x;
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    std::vector<Expression> args;
    args.reserve(x.args().size());
    for (const auto& a : x.args()) args.push_back(self(a, self));
    Expression result;
    switch (x.kind()) {
      case Kind::kSum:
        result = reduce_pythagorean(add(std::move(args)));
        break;
      case Kind::kProduct:
        result = mul(std::move(args));
        break;
      case Kind::kPower:
        result = pow(args[0], args[1]);
        break;
      case Kind::kSin:
        result = sin(args[0]);
        break;
      case Kind::kCos:
        result = cos(args[0]);
        break;
      default:
        result = x;
    }
    memo.emplace(x.id(), result);
    return result;
  };
  return s(e, s);
}

Expression expand(const Expression& e) {
  std::unordered_map<const Node*, Expression> memo;
  auto x_expand = [&](const Expression& x, auto&& self) -> Expression {
    if (x.kind() == Kind::kConstant || x.kind() == Kind::kSymbol) return x;
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Expression result;
    switch (x.kind()) {
      case Kind::kSum: {
        std::vector<Expression> terms;
        for (const auto& t : x.args()) terms.push_back(self(t, self));
        result = add(std::move(terms));
        break;
      }
      case Kind::kProduct: {
        Expression acc(1);
        for (const auto& f : x.args()) acc = distribute(acc, self(f, self));
        result = acc;
        break;
      }
      case Kind::kPower: {
        Expression base = self(x.args()[0], self);
        const Number& n = x.exponent();
        if (base.kind() == Kind::kSum && n.is_integer() && !n.is_negative() && n.is_exact()) {
          Expression acc = base;
          for (std::int64_t i = 1; i < n.numerator(); ++i) acc = distribute(acc, base);
          result = acc;
        } else {
          result = pow(base, x.args()[1]);
          if (result.kind() == Kind::kProduct && result.id() != x.id()) {
            Expression acc(1);
            for (const auto& f : result.args()) {
              acc = distribute(acc, f.kind() == Kind::kPower ? self(f, self) : f);
            }
            result = acc;
          }
        }
        break;
      }
      case Kind::kSin:
        result = sin(self(x.args()[0], self));
        break;
      case Kind::kCos:
        result = cos(self(x.args()[0], self));
        break;
      default:
        result = x;
    }
    memo.emplace(x.id(), result);
    return result;
  };
  return x_expand(e, x_expand);
}

}  // namespace lambdavac::sym
