#include "lambdavac/curvature/curvature.hpp"

#include <array>
#include <set>

#include "lambdavac/errors.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::curvature {

using sym::Expression;

namespace {

constexpr std::size_t N = kDim;

// Sum of products, skipping structurally zero factors.
class SumBuilder {
 public:
  void add_product(std::initializer_list<const Expression*> factors, int sign = 1) {
    std::vector<Expression> f;
    f.reserve(factors.size() + 1);
    for (const Expression* e : factors) {
      if (e->is_zero()) return;
      f.push_back(*e);
    }
    if (sign != 1) f.emplace_back(sign);
    terms_.push_back(sym::mul(std::move(f)));
  }
  void add(const Expression& e, int sign = 1) {
    if (e.is_zero()) return;
    terms_.push_back(sign == 1 ? e : -e);
  }
  Expression result() { return sym::add(std::move(terms_)); }

 private:
  std::vector<Expression> terms_;
};

// The six index pairs a < b.
constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Calls f(a, b, c, d) for one representative of each class under
// antisymmetry in (ab), (cd) and pair exchange, then copies the result to
// the other members of the class.
template <typename F>
void fill_by_riemann_symmetry(Tensor4& out, F&& f) {
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    for (std::size_t q = p; q < kPairs.size(); ++q) {
      const auto [a, b] = kPairs[p];
      const auto [c, d] = kPairs[q];
      const Expression v = f(a, b, c, d);
      const Expression nv = -v;
      out(a, b, c, d) = v;
      out(b, a, c, d) = nv;
      out(a, b, d, c) = nv;
      out(b, a, d, c) = v;
      out(c, d, a, b) = v;
      out(d, c, a, b) = nv;
      out(c, d, b, a) = nv;
      out(d, c, b, a) = v;
    }
  }
}

template <std::size_t Rank>
void tidy_all(Tensor<Rank>& t, const CurvatureOptions& options) {
  t.transform([&](const Expression& e) { return tidy(e, options); });
}

Tensor2 to_tensor(const MetricTensor& g) { return g.as_tensor(); }

Tensor2 compute_ricci(const Tensor4& mixed, const CurvatureOptions& options) {
  Tensor2 ricci;
  for (std::size_t mu = 0; mu < N; ++mu) {
    for (std::size_t nu = options.exploit_symmetries ? mu : 0; nu < N; ++nu) {
      SumBuilder s;
      for (std::size_t rho = 0; rho < N; ++rho) s.add(mixed(rho, mu, rho, nu));
      ricci(mu, nu) = tidy(s.result(), options);
      if (options.exploit_symmetries) ricci(nu, mu) = ricci(mu, nu);
    }
  }
  return ricci;
}

Expression contract_scalar(const Tensor2& inverse, const Tensor2& ricci, const CurvatureOptions& options) {
  SumBuilder s;
  for (std::size_t mu = 0; mu < N; ++mu) {
    for (std::size_t nu = 0; nu < N; ++nu) s.add_product({&inverse(mu, nu), &ricci(mu, nu)});
  }
  return tidy(s.result(), options);
}

// Raises index `slot` of a rank-4 tensor with g^{..}.
Tensor4 raise(const Tensor4& t, const Tensor2& inverse, std::size_t slot, const CurvatureOptions& options) {
  Tensor4 out;
  std::array<std::size_t, 4> idx{};
  for (idx[0] = 0; idx[0] < N; ++idx[0]) {
    for (idx[1] = 0; idx[1] < N; ++idx[1]) {
      for (idx[2] = 0; idx[2] < N; ++idx[2]) {
        for (idx[3] = 0; idx[3] < N; ++idx[3]) {
          SumBuilder s;
          auto src = idx;
          for (std::size_t e = 0; e < N; ++e) {
            src[slot] = e;
            s.add_product({&inverse(idx[slot], e), &t(src[0], src[1], src[2], src[3])});
          }
          out(idx[0], idx[1], idx[2], idx[3]) = tidy(s.result(), options);
        }
      }
    }
  }
  return out;
}

}  // namespace

Expression tidy(const Expression& e, const CurvatureOptions& options) {
  if (e.is_constant()) return e;
  Expression out = sym::simplify(options.expand ? sym::expand(e) : e);
  if (options.prune_zeros && !out.is_constant()) {
    try {
      if (sym::is_zero_identity(out, options.zero_test)) return Expression(0);
    } catch (const InconclusiveError&) {
    }
  }
  return out;
}

Tensor2 invert_metric(const MetricTensor& g, const CurvatureOptions& options) {
  if (g.dimension() != N) throw std::invalid_argument("expected a 4-dimensional metric");
  const Expression det = tidy(determinant(g), options);
  if (det.is_zero()) throw SingularMetricError("metric determinant is identically zero");
  const Expression inv_det = sym::pow(det, Expression(-1));
  Tensor2 inverse;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      // (g^{-1})_ij = C_ji / det with C_ji = (-1)^{i+j} M_ji, the minor
      // deleting row j and column i. M_ji is a general 3x3 determinant.
      std::array<std::array<Expression, 3>, 3> a;
      for (std::size_t r = 0, rr = 0; r < N; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < N; ++c) {
          if (c == i) continue;
          a[rr][cc++] = g(r, c);
        }
        ++rr;
      }
      const Expression m = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      const Expression cofactor = ((i + j) % 2 == 0) ? m : -m;
      inverse(i, j) = cofactor.is_zero() ? Expression(0) : tidy(cofactor * inv_det, options);
      inverse(j, i) = inverse(i, j);
    }
  }
  return inverse;
}

CurvatureBundle compute_curvature(const MetricTensor& g, const CurvatureOptions& options) {
  if (g.dimension() != N) throw std::invalid_argument("expected a 4-dimensional metric");
  CurvatureBundle b;
  b.coords = g.coords();
  b.metric = to_tensor(g);
  b.inverse = invert_metric(g, options);
  const auto& x = b.coords;
  const sym::DependencyMap* deps = options.dependencies;

  // dg(σ, μ, ν) = ∂_σ g_{μν}
  Tensor3 dg;
  for (std::size_t s = 0; s < N; ++s) {
    for (std::size_t mu = 0; mu < N; ++mu) {
      for (std::size_t nu = mu; nu < N; ++nu) {
        dg(s, mu, nu) = tidy(sym::differentiate(b.metric(mu, nu), x[s], deps), options);
        dg(s, nu, mu) = dg(s, mu, nu);
      }
    }
  }

  const Expression half = Expression(sym::Number::rational(1, 2));
  for (std::size_t rho = 0; rho < N; ++rho) {
    for (std::size_t mu = 0; mu < N; ++mu) {
      for (std::size_t nu = mu; nu < N; ++nu) {
        SumBuilder s;
        for (std::size_t sg = 0; sg < N; ++sg) {
          const Expression& ginv = b.inverse(rho, sg);
          if (ginv.is_zero()) continue;
          SumBuilder inner;
          inner.add(dg(mu, sg, nu));
          inner.add(dg(nu, sg, mu));
          inner.add(dg(sg, mu, nu), -1);
          const Expression bracket = inner.result();
          s.add_product({&ginv, &bracket});
        }
        Expression total = s.result();
        b.christoffel(rho, mu, nu) = tidy(half * total, options);
        b.christoffel(rho, nu, mu) = b.christoffel(rho, mu, nu);
      }
    }
  }

  // dgamma(κ, ρ, μ, ν) = ∂_κ Γ^ρ_{μν}
  Tensor4 dgamma;
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t rho = 0; rho < N; ++rho) {
      for (std::size_t mu = 0; mu < N; ++mu) {
        for (std::size_t nu = mu; nu < N; ++nu) {
          dgamma(k, rho, mu, nu) = tidy(sym::differentiate(b.christoffel(rho, mu, nu), x[k], deps), options);
          dgamma(k, rho, nu, mu) = dgamma(k, rho, mu, nu);
        }
      }
    }
  }

  const auto& G = b.christoffel;
  auto mixed_component = [&](std::size_t rho, std::size_t sg, std::size_t mu, std::size_t nu) {
    SumBuilder s;
    s.add(dgamma(mu, rho, nu, sg));
    s.add(dgamma(nu, rho, mu, sg), -1);
    for (std::size_t l = 0; l < N; ++l) {
      s.add_product({&G(rho, mu, l), &G(l, nu, sg)});
      s.add_product({&G(rho, nu, l), &G(l, mu, sg)}, -1);
    }
    return tidy(s.result(), options);
  };

  // mixed(ρ, σ, μ, ν) = R^ρ_{σμν}
  Tensor4 mixed;
  for (std::size_t rho = 0; rho < N; ++rho) {
    for (std::size_t sg = 0; sg < N; ++sg) {
      for (std::size_t mu = 0; mu < N; ++mu) {
        for (std::size_t nu = options.exploit_symmetries ? mu + 1 : 0; nu < N; ++nu) {
          mixed(rho, sg, mu, nu) = mixed_component(rho, sg, mu, nu);
          if (options.exploit_symmetries) mixed(rho, sg, nu, mu) = -mixed(rho, sg, mu, nu);
        }
      }
    }
  }

  auto lowered_component = [&](std::size_t a, std::size_t bb, std::size_t mu, std::size_t nu) {
    SumBuilder s;
    for (std::size_t rho = 0; rho < N; ++rho) s.add_product({&b.metric(a, rho), &mixed(rho, bb, mu, nu)});
    return tidy(s.result(), options);
  };
  if (options.exploit_symmetries) {
    fill_by_riemann_symmetry(b.riemann, lowered_component);
  } else {
    for (std::size_t i = 0; i < Tensor4::kSize; ++i) {
      b.riemann.data()[i] = lowered_component(i / 64, (i / 16) % 4, (i / 4) % 4, i % 4);
    }
  }

  b.ricci = compute_ricci(mixed, options);
  b.scalar = contract_scalar(b.inverse, b.ricci, options);
  if (options.ricci_only) return b;

  Tensor4 up = b.riemann;
  for (std::size_t slot = 0; slot < 4; ++slot) up = raise(up, b.inverse, slot, options);
  {
    SumBuilder s;
    for (std::size_t i = 0; i < Tensor4::kSize; ++i) s.add_product({&up.data()[i], &b.riemann.data()[i]});
    b.kretschmann = tidy(s.result(), options);
  }

  const auto& g4 = b.metric;
  const auto& ric = b.ricci;
  const Expression r6 = b.scalar * Expression(sym::Number::rational(1, 6));
  auto weyl_component = [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) {
    SumBuilder s;
    s.add(b.riemann(a, bb, c, d));
    SumBuilder mix;
    mix.add_product({&g4(a, c), &ric(bb, d)});
    mix.add_product({&g4(a, d), &ric(bb, c)}, -1);
    mix.add_product({&g4(bb, c), &ric(a, d)}, -1);
    mix.add_product({&g4(bb, d), &ric(a, c)});
    s.add(half * mix.result(), -1);
    SumBuilder gg;
    gg.add_product({&g4(a, c), &g4(bb, d)});
    gg.add_product({&g4(a, d), &g4(bb, c)}, -1);
    const Expression ggr = gg.result();
    s.add_product({&r6, &ggr});
    return tidy(s.result(), options);
  };
  if (options.exploit_symmetries) {
    fill_by_riemann_symmetry(b.weyl, weyl_component);
  } else {
    for (std::size_t i = 0; i < Tensor4::kSize; ++i) {
      b.weyl.data()[i] = weyl_component(i / 64, (i / 16) % 4, (i / 4) % 4, i % 4);
    }
  }
  return b;
}

Expression scalar_curvature(const CurvatureBundle& bundle, const CurvatureOptions& options) {
  return contract_scalar(bundle.inverse, bundle.ricci, options);
}

Tensor2 einstein_residual(const CurvatureBundle& bundle, const Expression& lambda, const CurvatureOptions& options) {
  Tensor2 out;
  for (std::size_t i = 0; i < Tensor2::kSize; ++i) {
    out.data()[i] = tidy(bundle.ricci.data()[i] - lambda * bundle.metric.data()[i], options);
  }
  return out;
}

Tensor2 einstein_residual(const MetricTensor& g, const Expression& lambda, CurvatureOptions options) {
  options.ricci_only = true;
  return einstein_residual(compute_curvature(g, options), lambda, options);
}

CurvatureBundle realize(const CurvatureBundle& bundle, const sym::DependencyMap& dependencies,
                        const sym::SubstitutionMap& realizations) {
  std::set<std::string> symbols;
  auto collect = [&](const auto& tensor) {
    for (const auto& e : tensor.data()) {
      auto s = sym::free_symbols(e);
      symbols.insert(s.begin(), s.end());
    }
  };
  collect(bundle.metric);
  collect(bundle.inverse);
  collect(bundle.christoffel);
  collect(bundle.riemann);
  collect(bundle.ricci);
  collect(bundle.weyl);
  for (const auto& e : {bundle.scalar, bundle.kretschmann}) {
    auto s = sym::free_symbols(e);
    symbols.insert(s.begin(), s.end());
  }
  const sym::SubstitutionMap map = sym::jet_realization(symbols, dependencies, realizations);
  auto apply = [&](const Expression& e) { return sym::simplify(sym::substitute(e, map)); };

  CurvatureBundle out = bundle;
  out.metric.transform(apply);
  out.inverse.transform(apply);
  out.christoffel.transform(apply);
  out.riemann.transform(apply);
  out.ricci.transform(apply);
  out.weyl.transform(apply);
  out.scalar = apply(bundle.scalar);
  out.kretschmann = apply(bundle.kretschmann);
  return out;
}

namespace {

void check_relation(IdentityReport& report, const Expression& e, const sym::ZeroTestOptions& options) {
  ++report.checked;
  if (e.is_zero()) return;
  bool zero = false;
  try {
    zero = sym::is_zero_identity(e, options);
  } catch (const InconclusiveError&) {
  }
  if (!zero) ++report.failed;
}

}  // namespace

IdentityReport check_riemann_symmetries(const CurvatureBundle& bundle, const sym::ZeroTestOptions& options) {
  IdentityReport report;
  const auto& R = bundle.riemann;
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t d = 0; d < N; ++d) {
          check_relation(report, R(a, b, c, d) + R(b, a, c, d), options);
          check_relation(report, R(a, b, c, d) + R(a, b, d, c), options);
          check_relation(report, R(a, b, c, d) - R(c, d, a, b), options);
          check_relation(report, R(a, b, c, d) + R(a, c, d, b) + R(a, d, b, c), options);
        }
      }
    }
  }
  return report;
}

IdentityReport check_weyl_traceless(const CurvatureBundle& bundle, const sym::ZeroTestOptions& options) {
  IdentityReport report;
  for (std::size_t b = 0; b < N; ++b) {
    for (std::size_t d = 0; d < N; ++d) {
      SumBuilder s;
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t c = 0; c < N; ++c) s.add_product({&bundle.inverse(a, c), &bundle.weyl(a, b, c, d)});
      }
      check_relation(report, s.result(), options);
    }
  }
  return report;
}

}  // namespace lambdavac::curvature
