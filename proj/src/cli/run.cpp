#include "lambdavac/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lambdavac/analysis/grid.hpp"
#include "lambdavac/ansatz/catalog.hpp"
#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/metriclang/solution_file.hpp"
#include "lambdavac/newmanpenrose/weyl_scalars.hpp"
#include "lambdavac/symcore/simplify.hpp"

namespace lambdavac::cli {
namespace {

using json = nlohmann::ordered_json;
using sym::Expression;
using sym::Number;

constexpr const char* kVersion = "1.0.0";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  json source;
  std::string name;
  std::optional<ansatz::AnsatzSolution> ansatz;
  curvature::MetricTensor metric;
  Number lambda{0};
  std::optional<Number> m;
  std::vector<std::string> warnings;
};

// Numeric value at a point plus, when every coordinate was given exactly,
// the exact substitution.
struct Point {
  sym::Binding numeric;
  std::optional<sym::SubstitutionMap> exact;
};

json conventions() {
  json c;
  c["signature"] = "(+,-,-,-)";
  c["christoffel"] = "G^r_{mn} = (1/2) g^{rs} (d_m g_{sn} + d_n g_{sm} - d_s g_{mn})";
  c["riemann"] = "R^r_{smn} = d_m G^r_{ns} - d_n G^r_{ms} + G^r_{ml} G^l_{ns} - G^r_{nl} G^l_{ms}";
  c["riemann_lowered"] = "R_{abmn} = g_{ar} R^r_{bmn}";
  c["ricci"] = "R_{mn} = R^r_{mrn}";
  c["field_equations"] = "R_{mn} = Lambda g_{mn}";
  c["riemann_sign_flip"] = false;
  c["weyl"] = "C = Riem - (g wedge Ric)/2 + (R/6)(g wedge g)";
  c["tetrad"] = "l.n = 1, m.mbar = -1";
  c["weyl_scalars"] = "Psi0=C(l,m,l,m) Psi1=C(l,n,l,m) Psi2=C(l,m,mbar,n) Psi3=C(l,n,mbar,n) Psi4=C(n,mbar,n,mbar)";
  return c;
}

Number parse_param(const std::string& text, const char* flag) {
  try {
    return metriclang::parse_number(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("--") + flag + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read metric file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void mass_warnings(const Number& m, std::vector<std::string>& warnings) {
  if (m.is_zero()) {
    warnings.emplace_back("m = 0: the metric is conformally flat where a_x != 0");
  } else if (!m.is_integer()) {
    warnings.emplace_back("m = " + m.to_string() + " is not a positive integer");
  }
}

Input load_input(const RunConfig& config) {
  if (config.builtin.has_value() == config.metric_path.has_value()) {
    throw InputError("exactly one of --builtin or --metric is required");
  }
  Input in;
  if (config.builtin) {
    Number lambda = config.lambda ? parse_param(*config.lambda, "lambda") : Number(1);
    Number m = config.m ? parse_param(*config.m, "m") : Number(1);
    auto [projected_lambda, projected_m] = ansatz::project_parameters(*config.builtin, lambda, m);
    if (!config.lambda) lambda = projected_lambda;
    if (!config.m) m = projected_m;
    in.ansatz = ansatz::builtin(*config.builtin, lambda, m);
    in.name = *config.builtin;
    in.source = {{"kind", "builtin"}, {"name", *config.builtin}};
    mass_warnings(m, in.warnings);
  } else {
    metriclang::ParamOverrides overrides;
    if (config.lambda) overrides.emplace("Lambda", parse_param(*config.lambda, "lambda"));
    if (config.m) overrides.emplace("m", parse_param(*config.m, "m"));
    const auto spec = metriclang::parse_solution_file(read_file(*config.metric_path), overrides);
    in.warnings = spec.warnings;
    in.name = *config.metric_path;
    in.source = {{"kind", "file"}, {"path", *config.metric_path}};
    if (const auto* mode = std::get_if<metriclang::AnsatzMode>(&spec.mode)) {
      in.ansatz = ansatz::make_solution(mode->a, mode->lambda, mode->m, spec.coords, in.name);
    } else {
      const auto& components = std::get<metriclang::ExplicitMode>(spec.mode).components;
      curvature::MetricTensor g({spec.coords.begin(), spec.coords.end()});
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) g.set(i, j, components[metriclang::upper_index(i, j)]);
      }
      g.parameters = spec.params;
      in.metric = g;
      if (auto it = spec.params.find("Lambda"); it != spec.params.end()) in.lambda = it->second;
      if (auto it = spec.params.find("m"); it != spec.params.end()) in.m = it->second;
    }
  }
  if (in.ansatz) {
    in.metric = in.ansatz->metric;
    in.lambda = in.ansatz->lambda;
    in.m = in.ansatz->m;
  }
  return in;
}

std::vector<std::pair<std::string, Expression>> parse_assignments(const std::string& text) {
  std::vector<std::pair<std::string, Expression>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--at: expected name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    Expression value;
    try {
      value = metriclang::parse_expression(std::string_view(item).substr(eq + 1));
    } catch (const SyntaxError& e) {
      throw InputError("--at " + name + ": " + e.what());
    }
    if (!sym::free_symbols(value).empty()) throw InputError("--at " + name + ": value must be a constant");
    out.emplace_back(std::move(name), value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

sym::ZeroTestOptions zero_test_options(const RunConfig& config) {
  sym::ZeroTestOptions options;
  if (config.tolerance) {
    if (!(*config.tolerance > 0)) throw InputError("--tol must be positive");
    options.tolerance = *config.tolerance;
  }
  if (config.seed) options.seed = *config.seed;
  return options;
}

Point resolve_point(const RunConfig& config, const curvature::MetricTensor& g, const sym::ZeroTestOptions& zt) {
  const auto& coords = g.coords();
  Point p;
  if (!config.at) {
    const auto sample = sym::sample_points(coords, 1, zt).front();
    for (std::size_t i = 0; i < coords.size(); ++i) p.numeric[coords[i]] = sample[i];
    return p;
  }
  sym::SubstitutionMap exact;
  for (const auto& c : coords) exact[c] = Expression(0);
  for (const auto& [name, value] : parse_assignments(*config.at)) {
    if (std::find(coords.begin(), coords.end(), name) == coords.end()) {
      throw InputError("--at: unknown coordinate '" + name + "'");
    }
    exact[name] = value;
  }
  for (const auto& [name, value] : exact) p.numeric[name] = sym::evaluate(value, {});
  p.exact = std::move(exact);
  return p;
}

json point_json(const Point& p, const curvature::MetricTensor& g) {
  json j = json::object();
  for (const auto& c : g.coords()) j[c] = p.numeric.at(c);
  return j;
}

json value_json(const Expression& e, const Point& p) {
  json j;
  j["expression"] = sym::to_string(e);
  try {
    j["value"] = sym::evaluate(e, p.numeric);
  } catch (const DomainError&) {
    j["value"] = nullptr;
  }
  if (p.exact) {
    try {
      const Expression exact = sym::simplify(sym::substitute(e, *p.exact));
      if (exact.is_constant() && exact.number().is_exact()) j["exact"] = exact.number().to_string();
    } catch (const std::domain_error&) {
      // Undefined at this point; "value" is null as well.
    }
  }
  return j;
}

json grid_json(const analysis::Grid2D& g) {
  return {{"t0", g.t0}, {"t1", g.t1}, {"nt", g.nt}, {"x0", g.x0}, {"x1", g.x1}, {"nx", g.nx}};
}

json report_header(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt) {
  json r;
  r["tool"] = "lambdavac";
  r["version"] = kVersion;
  r["command"] = config.subcommand;
  r["source"] = in.source;
  json params = json::object();
  params["Lambda"] = in.lambda.to_string();
  if (in.m) params["m"] = in.m->to_string();
  r["parameters"] = params;
  r["coordinates"] = in.metric.coords();
  if (in.ansatz) {
    r["a"] = sym::to_string(in.ansatz->a);
    r["b"] = sym::to_string(in.ansatz->b);
  }
  r["conventions"] = conventions();
  r["zero_test"] = {{"samples", zt.samples}, {"tolerance", zt.tolerance}, {"seed", zt.seed}};
  r["warnings"] = in.warnings;
  return r;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& payload) {
  if (!config.out) {
    out << payload;
    return;
  }
  std::ofstream f(*config.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + *config.out + "'");
  f << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> sorted_symbols(const Expression& e) {
  auto s = sym::free_symbols(e);
  return {s.begin(), s.end()};
}

int cmd_verify(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  curvature::CurvatureOptions options;
  options.prune_zeros = false;
  options.zero_test = zt;
  const curvature::Tensor2 residual = curvature::einstein_residual(in.metric, Expression(in.lambda), options);
  json report = report_header(config, in, zt);
  json components = json::array();
  int vanishing = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const Expression e = residual(i, j);
      json c{{"i", i}, {"j", j}};
      bool vanishes = e.is_zero();
      if (!vanishes) {
        try {
          const auto rep = sym::zero_test(e, sorted_symbols(e), zt);
          vanishes = rep.zero;
          c["samples"] = rep.samples_used;
          c["domain_failures"] = rep.domain_failures;
          c["worst_relative"] = rep.worst_relative;
        } catch (const InconclusiveError&) {
          c["inconclusive"] = true;
        }
      }
      c["vanishes"] = vanishes;
      if (!vanishes) c["residual"] = sym::to_string(e);
      vanishing += vanishes ? 1 : 0;
      components.push_back(std::move(c));
    }
  }
  report["components"] = std::move(components);
  report["summary"] = std::to_string(vanishing) + "/10 components vanish";
  report["passed"] = vanishing == 10;
  emit(config, out, dump(report));
  return vanishing == 10 ? kSuccess : kVerificationFailure;
}

curvature::CurvatureBundle bundle_for(const Input& in, const sym::ZeroTestOptions& zt, std::string& route) {
  if (in.ansatz) {
    route = "generic-a";
    return ansatz::ansatz_curvature(*in.ansatz, zt).concrete;
  }
  route = "direct";
  curvature::CurvatureOptions options;
  options.zero_test = zt;
  return curvature::compute_curvature(in.metric, options);
}

int cmd_curvature(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  const Point p = resolve_point(config, in.metric, zt);
  std::string route;
  const auto bundle = bundle_for(in, zt, route);
  json report = report_header(config, in, zt);
  report["route"] = route;
  report["point"] = point_json(p, in.metric);
  report["scalar_curvature"] = value_json(bundle.scalar, p);
  report["kretschmann"] = value_json(bundle.kretschmann, p);
  json ricci = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      if (bundle.ricci(i, j).is_zero()) continue;
      json c = value_json(bundle.ricci(i, j), p);
      c["indices"] = {i, j};
      ricci.push_back(std::move(c));
    }
  }
  report["ricci"] = std::move(ricci);
  static constexpr std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  json riemann = json::array();
  for (std::size_t p1 = 0; p1 < 6; ++p1) {
    for (std::size_t p2 = p1; p2 < 6; ++p2) {
      const auto [a, b] = kPairs[p1];
      const auto [c, d] = kPairs[p2];
      const Expression& e = bundle.riemann(a, b, c, d);
      if (e.is_zero()) continue;
      json entry = value_json(e, p);
      entry["indices"] = {a, b, c, d};
      riemann.push_back(std::move(entry));
    }
  }
  report["riemann"] = std::move(riemann);
  emit(config, out, dump(report));
  return kSuccess;
}

bool identically_zero(const Expression& e, const sym::ZeroTestOptions& zt) {
  try {
    return sym::is_zero_identity(e, zt);
  } catch (const InconclusiveError&) {
    return false;
  }
}

int cmd_weyl(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  const Point p = resolve_point(config, in.metric, zt);
  np::WeylScalars scalars;
  bool normalized = false;
  std::string route;
  if (in.ansatz) {
    const auto curvature = ansatz::ansatz_curvature(*in.ansatz, zt);
    scalars = curvature.scalars;
    normalized = np::check_tetrad(curvature.generic.metric, np::canonical_tetrad(curvature.generic_metric, zt), zt).ok();
    route = "generic-a";
  } else {
    const np::NullTetrad tetrad = np::canonical_tetrad(in.metric, zt);
    curvature::CurvatureOptions options;
    options.zero_test = zt;
    const auto bundle = curvature::compute_curvature(in.metric, options);
    scalars = np::weyl_scalars(bundle, tetrad);
    normalized = np::check_tetrad(bundle.metric, tetrad, zt).ok();
    route = "direct";
  }
  json report = report_header(config, in, zt);
  report["route"] = route;
  report["point"] = point_json(p, in.metric);
  report["tetrad_normalized"] = normalized;
  json list = json::array();
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& z = scalars.psi[k];
    json entry;
    entry["name"] = "Psi" + std::to_string(k);
    entry["re"] = value_json(z.re, p);
    entry["im"] = value_json(z.im, p);
    entry["vanishes"] = identically_zero(z.re, zt) && identically_zero(z.im, zt);
    list.push_back(std::move(entry));
  }
  report["scalars"] = std::move(list);
  report["petrov_hint"] = std::string(np::to_string(np::petrov_hint(scalars, zt)));

  if (in.ansatz) {
    const auto& sol = *in.ansatz;
    const Expression psi2 = scalars.psi[2].re;
    const Expression reference = ansatz::psi2_reference(sol.a, sol.lambda, sol.m);
    json cmp;
    cmp["reference"] = value_json(reference, p);
    cmp["computed"] = value_json(psi2, p);
    cmp["matches"] = identically_zero(psi2 - reference, zt) && identically_zero(scalars.psi[2].im, zt);
    report["psi2_comparison"] = std::move(cmp);

    // Which constant c makes Psi2 = c + m/(6a^3)?
    const Expression mass_term =
        Expression(sol.m) * Expression(Number::rational(1, 6)) * sym::pow(sol.a, Expression(-3));
    const Expression rest = sym::simplify(psi2 - mass_term);
    json check;
    std::string matched = "neither";
    for (const auto& [label, factor] : {std::pair{"-Lambda/9", Number::rational(-1, 9)},
                                        std::pair{"-2*Lambda/9", Number::rational(-2, 9)}}) {
      const bool hit = identically_zero(rest - Expression(factor * sol.lambda), zt);
      check[label] = hit;
      if (hit && matched == "neither") matched = label;
    }
    check["matched"] = matched;
    report["constant_term_check"] = std::move(check);
  }
  emit(config, out, dump(report));
  return kSuccess;
}

analysis::FieldSource metric_fields(const Input& in, const RunConfig& config, bool with_curvature) {
  sym::Binding fixed;
  if (config.at) {
    for (const auto& [name, value] : parse_assignments(*config.at)) fixed[name] = sym::evaluate(value, {});
  }
  const auto& coords = in.metric.coords();
  for (std::size_t i = 2; i < coords.size(); ++i) fixed.try_emplace(coords[i], 0.0);
  if (with_curvature) {
    analysis::FieldSource s = in.ansatz ? analysis::field_source(*in.ansatz)
                                        : analysis::field_source(in.metric, in.name, fixed);
    s.fixed = fixed;
    return s;
  }
  analysis::FieldSource s;
  s.name = in.name;
  s.metric = in.metric;
  s.lambda = in.lambda;
  s.m = in.m;
  s.fixed = fixed;
  return s;
}

analysis::Grid2D require_grid(const RunConfig& config) {
  if (!config.grid) throw InputError("--grid t0:t1:nt,x0:x1:nx is required for " + config.subcommand);
  return analysis::Grid2D::parse(*config.grid);
}

json values_json(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) {
    if (std::isnan(v)) {
      arr.push_back(nullptr);
    } else {
      arr.push_back(v);
    }
  }
  return arr;
}

int cmd_grid_field(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  const analysis::Grid2D grid = require_grid(config);
  const analysis::FieldSource source = metric_fields(in, config, false);
  const bool signs = config.subcommand == "signmap";
  const analysis::GridReport grid_report =
      signs ? analysis::g00_sign_map(source, grid) : analysis::null_slope_field(source, grid);
  if (config.format == "csv") {
    std::ostringstream s;
    analysis::write_csv(s, grid_report);
    emit(config, out, s.str());
    return kSuccess;
  }
  json report = report_header(config, in, zt);
  report["grid"] = grid_json(grid);
  report["field"] = grid_report.field;
  if (signs) {
    std::size_t pos = 0, neg = 0, zero = 0;
    for (double v : grid_report.values) {
      if (std::isnan(v)) continue;
      (v > 0 ? pos : (v < 0 ? neg : zero))++;
    }
    report["counts"] = {{"positive", pos}, {"negative", neg}, {"zero", zero},
                        {"undefined", grid_report.undefined_count()}};
  } else {
    report["expression"] = sym::to_string(analysis::null_slope(in.metric));
    report["branches"] = "dt = 0 at every point; values give dt/dx of the second branch";
    report["undefined"] = grid_report.undefined_count();
  }
  report["values"] = values_json(grid_report.values);
  emit(config, out, dump(report));
  return kSuccess;
}

int cmd_singularities(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  const analysis::Grid2D grid = require_grid(config);
  const analysis::FieldSource source = metric_fields(in, config, true);
  const auto loci = analysis::singularity_scan(source, grid, config.k_threshold.value_or(1e6),
                                               config.det_threshold.value_or(1e-8));
  auto kind_name = [](analysis::Locus::Kind k) { return k == analysis::Locus::Kind::kPhysical ? "physical" : "chart"; };
  if (config.format == "csv") {
    std::ostringstream s;
    s << "t,x,kind,value\n";
    char buf[96];
    for (const auto& l : loci.loci) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%.17g\n", l.t, l.x, kind_name(l.kind), l.value);
      s << buf;
    }
    emit(config, out, s.str());
    return kSuccess;
  }
  json report = report_header(config, in, zt);
  report["grid"] = grid_json(grid);
  report["kretschmann"] = sym::to_string(source.kretschmann);
  report["determinant"] = sym::to_string(source.determinant);
  report["thresholds"] = {{"kretschmann", loci.k_threshold}, {"determinant", loci.det_threshold}};
  report["counts"] = {{"physical", loci.count(analysis::Locus::Kind::kPhysical)},
                      {"chart", loci.count(analysis::Locus::Kind::kChart)}};
  json list = json::array();
  for (const auto& l : loci.loci) {
    list.push_back({{"kind", kind_name(l.kind)},
                    {"t", l.t},
                    {"x", l.x},
                    {"i", l.i},
                    {"j", l.j},
                    {"value", l.value},
                    {"undefined", l.undefined}});
  }
  report["loci"] = std::move(list);
  emit(config, out, dump(report));
  return kSuccess;
}

int cmd_slice(const RunConfig& config, const Input& in, const sym::ZeroTestOptions& zt, std::ostream& out) {
  if (!config.at) throw InputError("slice needs --at naming the fixed coordinates, e.g. --at t=0");
  sym::SubstitutionMap fixed;
  json fixed_json = json::object();
  for (const auto& [name, value] : parse_assignments(*config.at)) {
    fixed[name] = value;
    fixed_json[name] = sym::to_string(value);
  }
  const curvature::MetricTensor slice = analysis::induced_slice(in.metric, fixed);
  json report = report_header(config, in, zt);
  if (identically_zero(curvature::determinant(slice), zt)) {
    report["warnings"].push_back("the induced metric is degenerate on this slice");
  }
  report["fixed"] = std::move(fixed_json);
  report["slice_coordinates"] = slice.coords();
  json components = json::array();
  for (std::size_t i = 0; i < slice.dimension(); ++i) {
    for (std::size_t j = i; j < slice.dimension(); ++j) {
      if (slice(i, j).is_zero()) continue;
      components.push_back({{"i", i}, {"j", j}, {"expression", sym::to_string(slice(i, j))}});
    }
  }
  report["components"] = std::move(components);
  emit(config, out, dump(report));
  return kSuccess;
}

int cmd_catalog(const RunConfig& config, std::ostream& out) {
  json report;
  report["tool"] = "lambdavac";
  report["version"] = kVersion;
  report["command"] = "catalog";
  json list = json::array();
  for (const auto& e : ansatz::catalog()) {
    list.push_back({{"name", e.name}, {"a", e.a}, {"constraint", ansatz::describe(e.constraint)},
                    {"summary", e.summary}});
  }
  report["entries"] = std::move(list);
  emit(config, out, dump(report));
  return kSuccess;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), config.subcommand) == names.end()) {
    throw InputError("unknown subcommand '" + config.subcommand + "'");
  }
  if (config.format != "json" && config.format != "csv") throw InputError("--format must be json or csv");
  const bool grid_command =
      config.subcommand == "signmap" || config.subcommand == "nullfield" || config.subcommand == "singularities";
  if (config.format == "csv" && !grid_command) {
    throw InputError("--format csv is only available for signmap, nullfield and singularities");
  }
  if (config.subcommand == "catalog") return cmd_catalog(config, out);

  const sym::ZeroTestOptions zt = zero_test_options(config);
  const Input in = load_input(config);
  if (config.subcommand == "verify") return cmd_verify(config, in, zt, out);
  if (config.subcommand == "curvature") return cmd_curvature(config, in, zt, out);
  if (config.subcommand == "weyl") return cmd_weyl(config, in, zt, out);
  if (config.subcommand == "singularities") return cmd_singularities(config, in, zt, out);
  if (config.subcommand == "slice") return cmd_slice(config, in, zt, out);
  return cmd_grid_field(config, in, zt, out);
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"verify",    "curvature",     "weyl",  "signmap",
                                              "nullfield", "singularities", "slice", "catalog"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const SyntaxError& e) {
    err << "error: syntax: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "error: invalid input: " << e.what() << '\n';
  } catch (const CatalogError& e) {
    err << "error: catalog: " << e.what() << '\n';
  } catch (const UnboundSymbolError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SingularMetricError& e) {
    err << "error: singular metric: " << e.what() << '\n';
  } catch (const UnsupportedStructureError& e) {
    err << "error: unsupported metric structure: " << e.what() << '\n';
  } catch (const DegenerateError& e) {
    err << "error: degenerate metric: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: undefined at the requested values: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace lambdavac::cli
