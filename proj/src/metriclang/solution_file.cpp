#include "lambdavac/metriclang/solution_file.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "lambdavac/errors.hpp"
#include "lambdavac/metriclang/parser.hpp"
#include "lambdavac/symcore/calculus.hpp"

namespace lambdavac::metriclang {
namespace {

using sym::Expression;
using sym::Number;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_reserved(std::string_view s) { return s == "pi" || s == "sin" || s == "cos"; }

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class FileParser {
 public:
  explicit FileParser(const ParamOverrides& overrides) : overrides_(overrides) {}

  SolutionSpec parse(std::string_view text) {
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!trim(line).empty()) handle_line(line, line_number);
      if (end == text.size()) break;
      pos = end + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ValidationError("line " + std::to_string(line) + ": " + message);
  }

  Expression parse_at(std::string_view line, std::string_view expr_text, std::size_t line_number) const {
    try {
      return parse_expression(expr_text);
    } catch (const SyntaxError& e) {
      const std::size_t column = static_cast<std::size_t>(expr_text.data() - line.data()) + e.offset();
      throw SyntaxError("line " + std::to_string(line_number) + ": " + e.message(), column);
    }
  }

  // Splits "lhs = rhs"; returns rhs.
  std::string_view rhs_of(std::string_view line, std::size_t line_number, std::string_view& lhs) const {
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_number, "expected '='");
    lhs = trim(line.substr(0, eq));
    std::string_view rhs = line.substr(eq + 1);
    if (trim(rhs).empty()) fail(line_number, "missing expression after '='");
    return rhs;
  }

  void handle_line(std::string_view line, std::size_t n) {
    auto w = words(line);
    const std::string_view keyword = w.front();
    if (keyword == "coords") {
      if (coords_line_) fail(n, "duplicate coords line");
      if (w.size() != 5) fail(n, "coords needs exactly 4 names");
      std::set<std::string_view> seen;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!is_identifier(w[i + 1]) || is_reserved(w[i + 1])) {
          fail(n, "invalid coordinate name '" + std::string(w[i + 1]) + "'");
        }
        if (!seen.insert(w[i + 1]).second) fail(n, "duplicate coordinate '" + std::string(w[i + 1]) + "'");
        spec_.coords[i] = std::string(w[i + 1]);
      }
      coords_line_ = n;
      return;
    }
    if (keyword == "param") {
      std::string_view lhs;
      std::string_view rhs = rhs_of(line.substr(line.find("param") + 5), n, lhs);
      if (!is_identifier(lhs) || is_reserved(lhs)) fail(n, "invalid parameter name '" + std::string(lhs) + "'");
      Expression value = parse_at(line, rhs, n);
      if (!value.is_constant()) fail(n, "parameter '" + std::string(lhs) + "' must be a number");
      if (!spec_.params.emplace(std::string(lhs), value.number()).second) {
        fail(n, "duplicate parameter '" + std::string(lhs) + "'");
      }
      return;
    }
    if (keyword == "g") {
      std::string_view lhs;
      std::string_view rhs = rhs_of(line, n, lhs);
      auto idx = words(lhs);
      if (idx.size() != 3 || idx[1].size() != 1 || idx[2].size() != 1 || idx[1][0] < '0' || idx[1][0] > '3' ||
          idx[2][0] < '0' || idx[2][0] > '3') {
        fail(n, "component line must read 'g <i> <j> = <expr>' with indices 0..3");
      }
      std::size_t i = static_cast<std::size_t>(idx[1][0] - '0');
      std::size_t j = static_cast<std::size_t>(idx[2][0] - '0');
      if (i > j) std::swap(i, j);
      const std::size_t k = upper_index(i, j);
      if (components_[k]) fail(n, "duplicate component g " + std::to_string(i) + " " + std::to_string(j));
      components_[k] = std::make_pair(parse_at(line, rhs, n), n);
      return;
    }
    std::string_view lhs;
    std::string_view rhs = rhs_of(line, n, lhs);
    if (lhs == "a") {
      if (a_) fail(n, "duplicate 'a' line");
      a_ = std::make_pair(parse_at(line, rhs, n), n);
      return;
    }
    fail(n, "unrecognized line '" + std::string(trim(line)) + "'");
  }

  Expression bind_params(const Expression& e) const {
    sym::SubstitutionMap map;
    for (const auto& [name, value] : spec_.params) map.emplace(name, Expression(value));
    return sym::substitute(e, map);
  }

  void check_symbols(const Expression& e, std::size_t n, const std::set<std::string>& allowed,
                     const std::string& what) const {
    for (const auto& s : sym::free_symbols(e)) {
      if (allowed.count(s)) continue;
      if (std::find(spec_.coords.begin(), spec_.coords.end(), s) != spec_.coords.end()) {
        fail(n, what + " may depend only on " + spec_.coords[0] + " and " + spec_.coords[1] + ", found '" + s + "'");
      }
      fail(n, "unknown symbol '" + s + "' in " + what);
    }
  }

  SolutionSpec finish() {
    if (!coords_line_) throw ValidationError("missing coords line");
    for (const auto& [name, value] : overrides_) spec_.params.insert_or_assign(name, value);
    const bool any_component = std::any_of(components_.begin(), components_.end(),
                                           [](const auto& c) { return c.has_value(); });
    if (a_ && any_component) throw ValidationError("file mixes an 'a' line with explicit 'g' components");
    if (a_) {
      for (const char* required : {"Lambda", "m"}) {
        if (!spec_.params.count(required)) {
          throw ValidationError(std::string("missing param line: ") + required + " is required in ansatz mode");
        }
      }
      AnsatzMode mode{bind_params(a_->first), spec_.params.at("Lambda"), spec_.params.at("m")};
      check_symbols(mode.a, a_->second, {spec_.coords[0], spec_.coords[1]}, "a");
      if (mode.m.is_negative()) throw ValidationError("param m must be >= 0");
      if (mode.m.is_zero()) {
        spec_.warnings.emplace_back("m = 0: the metric is conformally flat where a_x != 0");
      } else if (!mode.m.is_integer()) {
        spec_.warnings.emplace_back("m = " + mode.m.to_string() + " is not a positive integer");
      }
      spec_.mode = std::move(mode);
      return spec_;
    }
    if (!any_component) throw ValidationError("no metric given: expected an 'a' line or ten 'g' lines");
    ExplicitMode mode;
    std::set<std::string> allowed(spec_.coords.begin(), spec_.coords.end());
    std::size_t count = 0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      if (!components_[k]) continue;
      ++count;
      mode.components[k] = bind_params(components_[k]->first);
      check_symbols(mode.components[k], components_[k]->second, allowed, "component");
    }
    if (count < 10) {
      throw ValidationError("explicit metric has " + std::to_string(count) + " of 10 upper-triangle components");
    }
    spec_.mode = std::move(mode);
    return spec_;
  }

  const ParamOverrides& overrides_;
  SolutionSpec spec_;
  std::optional<std::size_t> coords_line_;
  std::optional<std::pair<Expression, std::size_t>> a_;
  std::array<std::optional<std::pair<Expression, std::size_t>>, 10> components_;
};

}  // namespace

std::size_t upper_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  static constexpr std::size_t kRowStart[4] = {0, 4, 7, 9};
  return kRowStart[i] + (j - i);
}

SolutionSpec parse_solution_file(std::string_view text, const ParamOverrides& overrides) {
  return FileParser(overrides).parse(text);
}

std::string serialize_solution(const SolutionSpec& spec) {
  std::ostringstream out;
  out << "coords " << spec.coords[0] << ' ' << spec.coords[1] << ' ' << spec.coords[2] << ' ' << spec.coords[3]
      << '\n';
  for (const auto& [name, value] : spec.params) out << "param " << name << " = " << value.to_string() << '\n';
  if (const auto* ansatz = std::get_if<AnsatzMode>(&spec.mode)) {
    out << "a = " << sym::to_string(ansatz->a) << '\n';
  } else {
    const auto& explicit_mode = std::get<ExplicitMode>(spec.mode);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        out << "g " << i << ' ' << j << " = " << sym::to_string(explicit_mode.components[upper_index(i, j)])
            << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace lambdavac::metriclang
