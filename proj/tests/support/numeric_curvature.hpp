#ifndef LAMBDAVAC_TESTS_NUMERIC_CURVATURE_HPP
#define LAMBDAVAC_TESTS_NUMERIC_CURVATURE_HPP

// Finite-difference curvature of a numerically sampled metric. Shares no code
// with the symbolic pipeline, so it serves as an oracle for it.

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

#include "lambdavac/curvature/metric.hpp"
#include "lambdavac/symcore/evaluate.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace oracle {

using Point = std::array<double, 4>;
using MetricFn = std::function<Eigen::Matrix4d(const Point&)>;
using Gamma = std::array<Eigen::Matrix4d, 4>;  // gamma[r](m, n)

struct Curvature {
  Eigen::Matrix4d g;
  Eigen::Matrix4d ginv;
  double riemann[4][4][4][4];  // all indices down
  Eigen::Matrix4d ricci;
  double scalar = 0.0;
  double kretschmann = 0.0;
};

inline MetricFn sampled(const lambdavac::curvature::MetricTensor& g) {
  std::array<lambdavac::sym::CompiledExpression, 16> comp;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) comp[i * 4 + j] = lambdavac::sym::CompiledExpression(g(i, j), g.coords());
  }
  return [comp](const Point& p) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m(i, j) = comp[i * 4 + j](p);
    }
    return m;
  };
}

// Seeded points where the metric's condition number is at most max_cond, so
// that finite differences of the inverse metric stay accurate.
inline std::vector<Point> well_conditioned_points(const lambdavac::curvature::MetricTensor& g, std::size_t count,
                                                  double max_cond = 200.0) {
  const auto fn = sampled(g);
  std::vector<Point> out;
  for (const auto& p : lambdavac::sym::sample_points(g.coords(), static_cast<int>(count * 20))) {
    const Point q{p[0], p[1], p[2], p[3]};
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4d>(fn(q)).singularValues();
    if (!(sv(0) <= max_cond * sv(3))) continue;
    out.push_back(q);
    if (out.size() == count) break;
  }
  return out;
}

// Fourth-order central difference of f along coordinate k.
template <typename F>
Eigen::Matrix4d derivative(const F& f, const Point& p, int k, double h) {
  auto shifted = [&](double s) -> Eigen::Matrix4d {
    Point q = p;
    q[k] += s * h;
    return f(q);
  };
  return ((shifted(-2) - shifted(2)) + 8.0 * (shifted(1) - shifted(-1))) / (12.0 * h);
}

inline Gamma christoffel(const MetricFn& g, const Point& p, double h) {
  std::array<Eigen::Matrix4d, 4> dg;
  for (int k = 0; k < 4; ++k) dg[k] = derivative(g, p, k, h);
  const Eigen::Matrix4d ginv = g(p).inverse();
  Gamma out;
  for (int r = 0; r < 4; ++r) {
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        double s = 0.0;
        for (int q = 0; q < 4; ++q) s += ginv(r, q) * (dg[m](q, n) + dg[n](q, m) - dg[q](m, n));
        out[r](m, n) = 0.5 * s;
      }
    }
  }
  return out;
}

inline Curvature curvature(const MetricFn& g, const Point& p, double h = 1e-3) {
  Curvature c;
  c.g = g(p);
  c.ginv = c.g.inverse();
  const Gamma gam = christoffel(g, p, h);
  std::array<Gamma, 4> dgam;  // dgam[k][r](m, n) = d_k gamma^r_{mn}
  for (int k = 0; k < 4; ++k) {
    auto component = [&](int r) -> Eigen::Matrix4d {
      return derivative([&](const Point& q) { return christoffel(g, q, h)[r]; }, p, k, h);
    };
    for (int r = 0; r < 4; ++r) dgam[k][r] = component(r);
  }
  double up[4][4][4][4];
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) {
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          double v = dgam[m][r](n, s) - dgam[n][r](m, s);
          for (int l = 0; l < 4; ++l) v += gam[r](m, l) * gam[l](n, s) - gam[r](n, l) * gam[l](m, s);
          up[r][s][m][n] = v;
        }
      }
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          double v = 0.0;
          for (int r = 0; r < 4; ++r) v += c.g(a, r) * up[r][b][m][n];
          c.riemann[a][b][m][n] = v;
        }
      }
    }
  }
  c.ricci.setZero();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      for (int r = 0; r < 4; ++r) c.ricci(m, n) += up[r][m][r][n];
    }
  }
  c.scalar = (c.ginv.cwiseProduct(c.ricci)).sum();
  double k = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double raised = 0.0;
          for (int p2 = 0; p2 < 4; ++p2)
            for (int q = 0; q < 4; ++q)
              for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s)
                  raised += c.ginv(a, p2) * c.ginv(b, q) * c.ginv(m, r) * c.ginv(n, s) * c.riemann[p2][q][r][s];
          k += raised * c.riemann[a][b][m][n];
        }
  c.kretschmann = k;
  return c;
}

}  // namespace oracle

#endif  // LAMBDAVAC_TESTS_NUMERIC_CURVATURE_HPP
