#include "lambdavac/newmanpenrose/tetrad.hpp"

#include <cmath>
#include <optional>

#include "lambdavac/errors.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::np {

using sym::Expression;
using sym::Kind;
using sym::Number;

ComplexExpression operator+(const ComplexExpression& a, const ComplexExpression& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexExpression operator-(const ComplexExpression& a, const ComplexExpression& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexExpression operator*(const ComplexExpression& a, const ComplexExpression& b) {
  if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re, Expression(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexExpression simplify(const ComplexExpression& z) { return {sym::simplify(z.re), sym::simplify(z.im)}; }

ComplexVector complexify(const RealVector& v) {
  ComplexVector out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = {v[i], Expression(0)};
  return out;
}

ComplexVector conj(const ComplexVector& v) {
  ComplexVector out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = v[i].conj();
  return out;
}

ComplexVector NullTetrad::m() const {
  ComplexVector out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = {m_re[i], m_im[i]};
  return out;
}

ComplexVector NullTetrad::m_bar() const { return conj(m()); }

ComplexExpression inner(const curvature::Tensor2& g, const ComplexVector& u, const ComplexVector& v) {
  std::vector<Expression> re;
  std::vector<Expression> im;
  for (std::size_t a = 0; a < 4; ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < 4; ++b) {
      if (v[b].is_zero() || g(a, b).is_zero()) continue;
      const ComplexExpression term = ComplexExpression{g(a, b), Expression(0)} * u[a] * v[b];
      re.push_back(term.re);
      im.push_back(term.im);
    }
  }
  return simplify(ComplexExpression{sym::add(std::move(re)), sym::add(std::move(im))});
}

ComplexExpression contract(const curvature::Tensor4& t, const ComplexVector& u, const ComplexVector& v,
                           const ComplexVector& w, const ComplexVector& z) {
  std::vector<Expression> re;
  std::vector<Expression> im;
  for (std::size_t a = 0; a < 4; ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < 4; ++b) {
      if (v[b].is_zero()) continue;
      const ComplexExpression uv = u[a] * v[b];
      for (std::size_t c = 0; c < 4; ++c) {
        if (w[c].is_zero()) continue;
        const ComplexExpression uvw = uv * w[c];
        for (std::size_t d = 0; d < 4; ++d) {
          if (z[d].is_zero() || t(a, b, c, d).is_zero()) continue;
          const ComplexExpression term = ComplexExpression{t(a, b, c, d), Expression(0)} * uvw * z[d];
          re.push_back(term.re);
          im.push_back(term.im);
        }
      }
    }
  }
  return simplify(ComplexExpression{sym::add(std::move(re)), sym::add(std::move(im))});
}

namespace {

std::optional<std::int64_t> exact_isqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c) {
    if (c * c == v) return c;
  }
  return std::nullopt;
}

std::optional<Expression> sqrt_number(const Number& n) {
  if (!n.is_exact() || n.is_negative()) return std::nullopt;
  auto p = exact_isqrt(n.numerator());
  auto q = exact_isqrt(n.denominator());
  if (!p || !q) return std::nullopt;
  return Expression(Number::rational(*p, *q));
}

// Halves the exponent of an even integer power; nullopt otherwise.
std::optional<Expression> half_power(const Expression& f) {
  if (f.kind() != Kind::kPower) return std::nullopt;
  const Number& e = f.exponent();
  if (!e.is_exact() || !e.is_integer() || e.numerator() % 2 != 0) return std::nullopt;
  return sym::pow(f.args()[0], Expression(Number(e.numerator() / 2)));
}

bool zero_identity(const Expression& e, const sym::ZeroTestOptions& options) {
  try {
    return sym::is_zero_identity(e, options);
  } catch (const InconclusiveError&) {
    return false;
  }
}

}  // namespace

Expression sqrt_of_square(const Expression& e) {
  const Expression fallback = sym::pow(e, Expression(Number::rational(1, 2)));
  if (e.is_constant()) return sqrt_number(e.number()).value_or(fallback);
  auto [coefficient, rest] = sym::split_coefficient(e);
  auto root = sqrt_number(coefficient);
  if (!root) return fallback;
  std::vector<Expression> factors{*root};
  if (rest.kind() == Kind::kProduct) {
    for (const auto& f : rest.args()) {
      auto h = half_power(f);
      if (!h) return fallback;
      factors.push_back(*h);
    }
  } else {
    auto h = half_power(rest);
    if (!h) return fallback;
    factors.push_back(*h);
  }
  return sym::mul(std::move(factors));
}

NullTetrad canonical_tetrad(const curvature::MetricTensor& g, const sym::ZeroTestOptions& options) {
  if (g.dimension() != 4) throw UnsupportedStructureError("tetrad requires a 4-dimensional metric");
  if (!zero_identity(g(1, 1), options)) throw UnsupportedStructureError("tetrad requires g_11 = 0");
  for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
    if (!zero_identity(g(i, j), options)) {
      throw UnsupportedStructureError("tetrad requires g_" + std::to_string(i) + std::to_string(j) + " = 0");
    }
  }
  if (!zero_identity(g(2, 2) - g(3, 3), options)) throw UnsupportedStructureError("tetrad requires g_22 = g_33");
  if (zero_identity(g(0, 1), options)) throw DegenerateError("g_01 vanishes identically; no null frame of this form");

  const Expression& g00 = g(0, 0);
  const Expression& g01 = g(0, 1);
  const Expression a = sqrt_of_square(sym::simplify(-g(2, 2)));
  const Expression inv_sqrt2 = sym::pow(Expression(2), Expression(Number::rational(-1, 2)));

  NullTetrad t;
  for (std::size_t i = 0; i < 4; ++i) t.l[i] = t.n[i] = t.m_re[i] = t.m_im[i] = Expression(0);
  t.l[1] = Expression(1);
  t.n[0] = sym::pow(g01, Expression(-1));
  t.n[1] = sym::simplify(Expression(Number::rational(-1, 2)) * g00 * sym::pow(g01, Expression(-2)));
  const Expression scale = inv_sqrt2 * sym::pow(a, Expression(-1));
  t.m_re[2] = scale;
  t.m_im[3] = scale;
  return t;
}

TetradCheck check_tetrad(const curvature::Tensor2& g, const NullTetrad& tetrad, const sym::ZeroTestOptions& options) {
  const ComplexVector l = complexify(tetrad.l);
  const ComplexVector n = complexify(tetrad.n);
  const ComplexVector m = tetrad.m();
  const ComplexVector mb = tetrad.m_bar();
  auto vanishes = [&](const ComplexExpression& z) {
    return zero_identity(z.re, options) && zero_identity(z.im, options);
  };
  const ComplexExpression one{Expression(1), Expression(0)};
  TetradCheck c;
  c.ll = vanishes(inner(g, l, l));
  c.nn = vanishes(inner(g, n, n));
  c.mm = vanishes(inner(g, m, m));
  c.lm = vanishes(inner(g, l, m));
  c.nm = vanishes(inner(g, n, m));
  c.ln_is_one = vanishes(inner(g, l, n) - one);
  c.mmbar_is_minus_one = vanishes(inner(g, m, mb) + one);
  return c;
}

}  // namespace lambdavac::np
