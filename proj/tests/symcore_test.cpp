#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/calculus.hpp"
#include "lambdavac/symcore/evaluate.hpp"
#include "lambdavac/symcore/simplify.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace {

using namespace lambdavac;
using sym::Expression;
using sym::Number;

Expression S(const char* name) { return Expression::symbol(name); }
Expression P(const char* text) { return metriclang::parse_expression(text); }

TEST(Number, RationalsNormalize) {
  EXPECT_EQ(Number::rational(6, -4), Number::rational(-3, 2));
  EXPECT_EQ(Number::rational(1, 3) + Number::rational(1, 6), Number::rational(1, 2));
  EXPECT_EQ(Number::rational(2, 3) * Number::rational(3, 4), Number::rational(1, 2));
  EXPECT_EQ((Number(3) / Number(6)).to_string(), "1/2");
  EXPECT_THROW((void)Number::rational(1, 0), std::domain_error);
  EXPECT_THROW((void)(Number(1) / Number(0)), std::domain_error);
}

TEST(Number, OverflowFallsBackToDouble) {
  const Number big(std::numeric_limits<std::int64_t>::max() / 2);
  const Number product = big * Number(4);
  EXPECT_FALSE(product.is_exact());
  EXPECT_DOUBLE_EQ(product.to_double(), static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2) * 4.0);
}

TEST(Number, PowersStayExactWhenPossible) {
  EXPECT_EQ(*Number::rational(2, 3).pow(Number(3)), Number::rational(8, 27));
  EXPECT_EQ(*Number(2).pow(Number(-2)), Number::rational(1, 4));
  EXPECT_FALSE(Number(0).pow(Number(-1)).has_value());
  EXPECT_FALSE(Number(2).pow(Number::rational(1, 2)).has_value());
}

TEST(Number, ExactAndInexactNeverCompareEqual) {
  EXPECT_FALSE(Number(1) == Number::real(1.0));
  EXPECT_TRUE(std::is_lt(compare(Number(1), Number::real(1.0))));
}

TEST(Expression, ConstructorsCanonicalize) {
  const Expression x = S("x"), y = S("y");
  EXPECT_EQ(x + y, y + x);
  EXPECT_EQ(x * y, y * x);
  EXPECT_EQ(x + x, Expression(2) * x);
  EXPECT_EQ(x * x, sym::pow(x, Expression(2)));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x * Expression(0)).is_zero());
  EXPECT_TRUE((x / x).is_one());
  EXPECT_EQ(sym::sin(Expression(0)), Expression(0));
  EXPECT_EQ(sym::cos(Expression(0)), Expression(1));
  EXPECT_EQ(sym::sin(Expression(1)).kind(), sym::Kind::kSin);
}

TEST(Expression, PiIsReserved) {
  EXPECT_EQ(P("pi"), Expression::pi());
  EXPECT_DOUBLE_EQ(sym::evaluate(P("pi/2"), {}), M_PI / 2);
}

TEST(Expression, Printing) {
  EXPECT_EQ(sym::to_string(P("2 + cos(x)")), "2 + cos(x)");
  EXPECT_EQ(sym::to_string(P("a - (b + c)")), "a - (b + c)");
  EXPECT_EQ(sym::to_string(S("a") - (S("b") + S("c")) * Expression(2)), "a - 2*(b + c)");
  EXPECT_EQ(sym::to_string(P("1/(2*(2 + cos(x))^3)")), "1/(2*(2 + cos(x))^3)");
  EXPECT_EQ(sym::to_string(Expression(Number::rational(-3, 4))), "-3/4");
}

TEST(Expression, FreeSymbolsExcludePi) {
  const auto s = sym::free_symbols(P("x*sin(pi*t) + y^2"));
  EXPECT_EQ(s, (std::set<std::string>{"t", "x", "y"}));
}

TEST(Calculus, ElementaryDerivatives) {
  const Expression x = S("x");
  EXPECT_EQ(sym::simplify(sym::differentiate(P("x^3"), "x")), sym::simplify(P("3*x^2")));
  EXPECT_EQ(sym::simplify(sym::differentiate(P("sin(x)"), "x")), P("cos(x)"));
  EXPECT_EQ(sym::simplify(sym::differentiate(P("cos(2*x)"), "x")), sym::simplify(P("-2*sin(2*x)")));
  EXPECT_TRUE(sym::differentiate(P("y^2"), "x").is_zero());
  EXPECT_TRUE(sym::is_zero_identity(sym::differentiate(P("1/(x + sin(t))"), "t") + P("cos(t)/(x + sin(t))^2")));
}

TEST(Calculus, SubstitutionIsSimultaneous) {
  const Expression e = P("x + 2*y");
  const Expression swapped = sym::substitute(e, {{"x", S("y")}, {"y", S("x")}});
  EXPECT_EQ(swapped, P("y + 2*x"));
  EXPECT_DOUBLE_EQ(sym::evaluate(sym::substitute(P("cos(x)"), "x", Expression::pi()), {}), -1.0);
}

TEST(Calculus, JetsOfUndeclaredFunctions) {
  sym::DependencyMap deps;
  deps.declare("a", {"t", "x"});
  const Expression a = S("a");
  const Expression da = sym::differentiate(sym::pow(a, Expression(2)), "x", &deps);
  const std::string ax = deps.jet_name("a", {"x"});
  EXPECT_EQ(da, Expression(2) * a * S(ax.c_str()));
  // Mixed partials commute.
  const Expression txa = sym::differentiate(sym::differentiate(a, "t", &deps), "x", &deps);
  const Expression xta = sym::differentiate(sym::differentiate(a, "x", &deps), "t", &deps);
  EXPECT_EQ(txa, xta);
  ASSERT_TRUE(deps.decode(ax).has_value());
  EXPECT_EQ(deps.decode(ax)->function, "a");
}

TEST(Calculus, RealizationReplacesJets) {
  sym::DependencyMap deps;
  deps.declare("a", {"t", "x"});
  const Expression generic = sym::differentiate(sym::differentiate(S("a"), "x", &deps), "x", &deps);
  const Expression concrete = sym::realize_functions(generic, deps, {{"a", P("t*cos(x)")}});
  EXPECT_TRUE(sym::is_zero_identity(concrete + P("t*cos(x)")));
}

TEST(Simplify, CollectsAndExpands) {
  EXPECT_TRUE(sym::expand(P("(x + 1)^2 - x^2 - 2*x - 1")).is_zero());
  EXPECT_EQ(sym::expand(P("(x + y)*(x - y)")), sym::simplify(P("x^2 - y^2")));
  EXPECT_TRUE(sym::is_zero_identity(P("sin(x)^2 + cos(x)^2 - 1")));
}

TEST(Evaluate, MatchesLibm) {
  const Expression e = P("sin(x)^2*cos(y) + x^(-3) - 1/2");
  const double x = 0.7, y = -1.3;
  EXPECT_NEAR(sym::evaluate(e, {{"x", x}, {"y", y}}),
              std::sin(x) * std::sin(x) * std::cos(y) + std::pow(x, -3) - 0.5, 1e-14);
}

TEST(Evaluate, ErrorsAreTyped) {
  EXPECT_THROW((void)sym::evaluate(P("x + 1"), {}), UnboundSymbolError);
  EXPECT_THROW((void)sym::evaluate(P("1/x"), {{"x", 0.0}}), DomainError);
}

TEST(Evaluate, CompiledAgreesWithTreeWalk) {
  const Expression e = P("(2 + cos(x))^3*sin(t/6) + t/x");
  const sym::CompiledExpression c(e, {"t", "x"});
  for (double t : {-1.0, 0.5, 3.0}) {
    for (double x : {-0.4, 1.1}) {
      const std::array<double, 2> v{t, x};
      EXPECT_DOUBLE_EQ(c(v), sym::evaluate(e, {{"t", t}, {"x", x}}));
    }
  }
}

TEST(ZeroTest, DistinguishesIdentitiesFromNearMisses) {
  EXPECT_TRUE(sym::is_zero_identity(P("sin(2*x) - 2*sin(x)*cos(x)")));
  EXPECT_FALSE(sym::is_zero_identity(P("sin(2*x) - 2*sin(x)*cos(x) + x*10^(-6)")));
  EXPECT_FALSE(sym::is_zero_identity(P("x - y")));
}

TEST(ZeroTest, SkipsPolesAndReportsSamples) {
  const auto report = sym::zero_test(P("x/x - 1 + 1/(x - 1) - 1/(x - 1)"), {"x"});
  EXPECT_TRUE(report.zero);
  EXPECT_EQ(report.samples_used, 32);
}

TEST(ZeroTest, InconclusiveWhenNothingEvaluates) {
  sym::ZeroTestOptions options;
  options.default_box = {0.0, 0.0};
  EXPECT_THROW((void)sym::zero_test(P("1/x"), {"x"}, options), InconclusiveError);
}

TEST(ZeroTest, MissingVariableIsAnError) {
  EXPECT_THROW((void)sym::zero_test(P("x + y"), {"x"}), UnboundSymbolError);
}

TEST(ZeroTest, SeededSamplingIsReproducible) {
  sym::ZeroTestOptions a, b;
  a.seed = b.seed = 99;
  EXPECT_EQ(sym::sample_points({"t", "x"}, 5, a), sym::sample_points({"t", "x"}, 5, b));
  b.seed = 100;
  EXPECT_NE(sym::sample_points({"t", "x"}, 5, a), sym::sample_points({"t", "x"}, 5, b));
}

}  // namespace
