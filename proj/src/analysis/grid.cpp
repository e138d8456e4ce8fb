#include "lambdavac/analysis/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::analysis {

using sym::Expression;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kZeroBand = 1e-12;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_bound(std::string_view text) {
  try {
    const Expression e = metriclang::parse_expression(text);
    return sym::evaluate(e, {});
  } catch (const std::exception& e) {
    throw ValidationError("grid bound '" + std::string(text) + "': " + e.what());
  }
}

std::size_t parse_count(std::string_view text) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("grid count '" + std::string(text) + "' is not a non-negative integer");
  }
  return n;
}

// Variables and values shared by every lattice point; slots 0 and 1 are
// overwritten with (t, x).
struct Lattice {
  std::vector<std::string> vars;
  std::vector<double> base;
};

Lattice lattice_for(const FieldSource& source) {
  Lattice l;
  const auto& c = source.metric.coords();
  l.vars = {c[0], c[1]};
  l.base = {0.0, 0.0};
  for (const auto& [name, value] : source.fixed) {
    if (name == c[0] || name == c[1]) continue;
    l.vars.push_back(name);
    l.base.push_back(value);
  }
  return l;
}

// Evaluates each expression over the lattice; out[k][p] for expression k.
std::vector<std::vector<double>> evaluate_many(const std::vector<Expression>& exprs, const FieldSource& source,
                                               const Grid2D& grid) {
  grid.validate();
  const Lattice lattice = lattice_for(source);
  std::vector<sym::CompiledExpression> compiled;
  for (const auto& e : exprs) compiled.emplace_back(e, lattice.vars);
  std::vector<std::vector<double>> out(exprs.size(), std::vector<double>(grid.size(), kNaN));
  parallel_for(grid.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<double> point = lattice.base;
    std::vector<double> scratch;
    for (std::size_t p = begin; p < end; ++p) {
      point[0] = grid.t(p / grid.nx);
      point[1] = grid.x(p % grid.nx);
      for (std::size_t k = 0; k < compiled.size(); ++k) {
        auto r = compiled[k].run(point, scratch);
        if (r.ok()) out[k][p] = r.value;
      }
    }
  });
  return out;
}

GridReport make_report(const FieldSource& source, const Grid2D& grid, std::string field) {
  GridReport r;
  r.grid = grid;
  r.field = std::move(field);
  r.source = source.name;
  r.lambda = source.lambda;
  r.m = source.m;
  return r;
}

}  // namespace

Grid2D Grid2D::parse(std::string_view spec) {
  auto axes = split(spec, ',');
  if (axes.size() != 2) throw ValidationError("grid spec must read t0:t1:nt,x0:x1:nx");
  Grid2D g;
  for (std::size_t k = 0; k < 2; ++k) {
    auto parts = split(axes[k], ':');
    if (parts.size() != 3) throw ValidationError("grid spec must read t0:t1:nt,x0:x1:nx");
    const double lo = parse_bound(parts[0]);
    const double hi = parse_bound(parts[1]);
    const std::size_t n = parse_count(parts[2]);
    if (k == 0) {
      g.t0 = lo, g.t1 = hi, g.nt = n;
    } else {
      g.x0 = lo, g.x1 = hi, g.nx = n;
    }
  }
  g.validate();
  return g;
}

void Grid2D::validate() const {
  if (!(t0 < t1) || !(x0 < x1)) throw ValidationError("grid ranges must be nonempty (t0 < t1, x0 < x1)");
  if (nt < 2 || nx < 2) throw ValidationError("grid counts must be at least 2");
}

std::size_t GridReport::undefined_count() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  if (threads == 1 || count < 1024) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    pool.emplace_back(fn, begin, std::min(count, begin + chunk));
  }
  for (auto& t : pool) t.join();
}

FieldSource field_source(const ansatz::AnsatzSolution& sol) {
  FieldSource s;
  s.name = sol.name;
  s.metric = sol.metric;
  s.lambda = sol.lambda;
  s.m = sol.m;
  s.determinant = curvature::determinant(sol.metric);
  s.kretschmann = ansatz::ansatz_curvature(sol).concrete.kretschmann;
  return s;
}

FieldSource field_source(const curvature::MetricTensor& g, std::string name, sym::Binding fixed) {
  FieldSource s;
  s.name = std::move(name);
  s.metric = g;
  if (auto it = g.parameters.find("Lambda"); it != g.parameters.end()) s.lambda = it->second;
  if (auto it = g.parameters.find("m"); it != g.parameters.end()) s.m = it->second;
  s.determinant = curvature::determinant(g);
  s.kretschmann = curvature::compute_curvature(g).kretschmann;
  s.fixed = std::move(fixed);
  return s;
}

GridReport evaluate_grid(const Expression& e, const FieldSource& source, const Grid2D& grid, std::string field) {
  GridReport r = make_report(source, grid, std::move(field));
  r.values = std::move(evaluate_many({e}, source, grid).front());
  return r;
}

GridReport g00_sign_map(const FieldSource& source, const Grid2D& grid) {
  GridReport r = evaluate_grid(source.metric(0, 0), source, grid, "sign_g00");
  for (double& v : r.values) {
    if (std::isnan(v)) continue;
    v = std::abs(v) <= kZeroBand ? 0.0 : (v > 0 ? 1.0 : -1.0);
  }
  return r;
}

GridReport g00_sign_map(const ansatz::AnsatzSolution& sol, const Grid2D& grid) {
  FieldSource s;
  s.name = sol.name;
  s.metric = sol.metric;
  s.lambda = sol.lambda;
  s.m = sol.m;
  return g00_sign_map(s, grid);
}

Expression null_slope(const curvature::MetricTensor& g) {
  return sym::simplify(Expression(-2) * g(0, 1) * sym::pow(g(0, 0), Expression(-1)));
}

GridReport null_slope_field(const FieldSource& source, const Grid2D& grid) {
  auto fields = evaluate_many({source.metric(0, 0), source.metric(0, 1)}, source, grid);
  GridReport r = make_report(source, grid, "slope_dt_dx");
  r.values.assign(grid.size(), kNaN);
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double g00 = fields[0][p];
    const double g01 = fields[1][p];
    if (std::isnan(g00) || std::isnan(g01) || std::abs(g00) <= kZeroBand) continue;
    r.values[p] = -2.0 * g01 / g00;
  }
  return r;
}

GridReport null_slope_field(const ansatz::AnsatzSolution& sol, const Grid2D& grid) {
  FieldSource s;
  s.name = sol.name;
  s.metric = sol.metric;
  s.lambda = sol.lambda;
  s.m = sol.m;
  return null_slope_field(s, grid);
}

GridReport kretschmann_map(const FieldSource& source, const Grid2D& grid) {
  return evaluate_grid(source.kretschmann, source, grid, "kretschmann");
}

std::size_t SingularLoci::count(Locus::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(loci.begin(), loci.end(), [&](const Locus& l) { return l.kind == kind; }));
}

SingularLoci singularity_scan(const FieldSource& source, const Grid2D& grid, double k_threshold,
                              double det_threshold) {
  if (!(k_threshold > 0) || !(det_threshold > 0)) throw ValidationError("singularity thresholds must be positive");
  auto fields = evaluate_many({source.kretschmann, source.determinant}, source, grid);
  const auto& K = fields[0];
  const auto& det = fields[1];
  SingularLoci out;
  out.k_threshold = k_threshold;
  out.det_threshold = det_threshold;

  auto neighbour_max = [&](std::size_t i, std::size_t j) {
    double best = -1.0;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const auto ii = static_cast<std::ptrdiff_t>(i) + di;
        const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
        if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(grid.nt) ||
            jj >= static_cast<std::ptrdiff_t>(grid.nx)) {
          continue;
        }
        const double v = K[grid.index(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj))];
        if (!std::isnan(v)) best = std::max(best, std::abs(v));
      }
    }
    return best;
  };
  auto neighbour_undefined = [&](std::size_t i, std::size_t j) {
    for (std::size_t ii = i - 1; ii <= i + 1; ++ii) {
      for (std::size_t jj = j - 1; jj <= j + 1; ++jj) {
        if (std::isnan(K[grid.index(ii, jj)])) return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < grid.nt; ++i) {
    for (std::size_t j = 0; j < grid.nx; ++j) {
      const std::size_t p = grid.index(i, j);
      const bool interior = i > 0 && j > 0 && i + 1 < grid.nt && j + 1 < grid.nx;
      const double k = K[p];
      if (interior) {
        if (std::isnan(k)) {
          const double around = neighbour_max(i, j);
          if (around > k_threshold) {
            out.loci.push_back({Locus::Kind::kPhysical, i, j, grid.t(i), grid.x(j), around, true});
          }
        } else if (std::abs(k) > k_threshold && !neighbour_undefined(i, j) && std::abs(k) >= neighbour_max(i, j)) {
          out.loci.push_back({Locus::Kind::kPhysical, i, j, grid.t(i), grid.x(j), std::abs(k), false});
        }
      }
      const double d = det[p];
      if (std::isnan(d) || std::abs(d) >= det_threshold) continue;
      const double k_here = std::isnan(k) ? neighbour_max(i, j) : std::abs(k);
      if (k_here >= 0.0 && k_here <= k_threshold) {
        out.loci.push_back({Locus::Kind::kChart, i, j, grid.t(i), grid.x(j), std::abs(d), std::isnan(k)});
      }
    }
  }
  return out;
}

SingularLoci singularity_scan(const ansatz::AnsatzSolution& sol, const Grid2D& grid, double k_threshold,
                              double det_threshold) {
  return singularity_scan(field_source(sol), grid, k_threshold, det_threshold);
}

curvature::MetricTensor induced_slice(const curvature::MetricTensor& g, const sym::SubstitutionMap& fixed) {
  const auto& coords = g.coords();
  if (fixed.empty()) throw ValidationError("slice needs at least one fixed coordinate");
  for (const auto& [name, value] : fixed) {
    if (std::find(coords.begin(), coords.end(), name) == coords.end()) {
      throw ValidationError("slice fixes unknown coordinate '" + name + "'");
    }
  }
  if (fixed.size() >= coords.size()) throw ValidationError("slice cannot fix every coordinate");
  std::vector<std::size_t> keep;
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!fixed.count(coords[i])) {
      keep.push_back(i);
      kept_names.push_back(coords[i]);
    }
  }
  curvature::MetricTensor out(kept_names);
  out.parameters = g.parameters;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a; b < keep.size(); ++b) {
      out.set(a, b, sym::simplify(sym::substitute(g(keep[a], keep[b]), fixed)));
    }
  }
  return out;
}

curvature::MetricTensor induced_slice(const ansatz::AnsatzSolution& sol, const sym::SubstitutionMap& fixed) {
  return induced_slice(sol.metric, fixed);
}

void write_csv(std::ostream& out, const GridReport& report) {
  out << "t,x," << report.field << '\n';
  char buf[64];
  auto fmt = [&](double v) -> const char* {
    if (std::isnan(v)) return "nan";
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  };
  for (std::size_t i = 0; i < report.grid.nt; ++i) {
    for (std::size_t j = 0; j < report.grid.nx; ++j) {
      out << fmt(report.grid.t(i)) << ',';
      out << fmt(report.grid.x(j)) << ',';
      out << fmt(report.at(i, j)) << '\n';
    }
  }
}

}  // namespace lambdavac::analysis
