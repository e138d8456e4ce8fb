#ifndef LAMBDAVAC_SYMCORE_EXPRESSION_HPP
#define LAMBDAVAC_SYMCORE_EXPRESSION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lambdavac/symcore/number.hpp"

namespace lambdavac::sym {

enum class Kind : std::uint8_t {
  kConstant,
  kSymbol,
  kPower,
  kProduct,
  kSum,
  kSin,
  kCos,
};

/// Reserved symbol name; evaluation always binds it to π.
inline constexpr std::string_view kPiName = "pi";

struct Node;

/// Immutable symbolic expression. Copies share structure, so an expression is
/// a DAG; every operation below treats shared subtrees once.
///
/// Construction goes through the smart constructors (operators, add, mul,
/// pow, sin, cos), which keep the tree in a light canonical form: nested sums
/// and products are flattened, constants folded, like terms and like bases
/// collected, and arguments sorted by a fixed total order. Division is a
/// power of -1 and subtraction a (-1)-scaled product.
class Expression {
 public:
  /// The constant 0.
  Expression();
  Expression(const Number& value);  // NOLINT(implicit)
  Expression(int value);            // NOLINT(implicit)
  Expression(std::int64_t value);   // NOLINT(implicit)

  static Expression symbol(std::string name);
  static Expression pi() { return symbol(std::string(kPiName)); }

  Kind kind() const;
  /// Constant value; precondition kind() == kConstant.
  const Number& number() const;
  /// Symbol name; precondition kind() == kSymbol.
  const std::string& name() const;
  /// Children: sum terms, product factors, {base, exponent}, or the trig argument.
  std::span<const Expression> args() const;
  /// Exponent of a power node as a number.
  const Number& exponent() const;

  std::size_t hash() const;
  /// 64-bit bloom filter of the symbol names appearing in the tree.
  std::uint64_t symbol_mask() const;
  /// Node identity, stable for the lifetime of any copy.
  const Node* id() const { return node_.get(); }

  bool is_constant() const { return kind() == Kind::kConstant; }
  bool is_zero() const;
  bool is_one() const;
  bool depends_on(std::string_view symbol) const;

  /// Structural equality.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Expression make_node(Kind, Number, std::string, std::vector<Expression>);

  std::shared_ptr<const Node> node_;
};

/// Total structural order used to sort sum terms and product factors.
int compare(const Expression& a, const Expression& b);

struct ExpressionHash {
  std::size_t operator()(const Expression& e) const { return e.hash(); }
};

std::uint64_t symbol_bit(std::string_view name);

// Smart constructors.
Expression add(std::vector<Expression> terms);
Expression mul(std::vector<Expression> factors);
/// Throws std::invalid_argument for a non-constant exponent and
/// std::domain_error for a zero base with a negative exponent.
Expression pow(const Expression& base, const Expression& exponent);
Expression sin(const Expression& arg);
Expression cos(const Expression& arg);

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);
Expression& operator+=(Expression& a, const Expression& b);
Expression& operator-=(Expression& a, const Expression& b);
Expression& operator*=(Expression& a, const Expression& b);

/// Splits a term into numeric coefficient and remaining factor product.
std::pair<Number, Expression> split_coefficient(const Expression& term);

/// Free symbol names, excluding the reserved pi.
std::set<std::string> free_symbols(const Expression& e);

/// Number of distinct nodes in the DAG.
std::size_t dag_size(const Expression& e);

/// Parseable canonical rendering, e.g. "2 + cos(x)" or "-sin(x)/(2 + cos(x))".
std::string to_string(const Expression& e);
std::ostream& operator<<(std::ostream& out, const Expression& e);

}  // namespace lambdavac::sym

template <>
struct std::hash<lambdavac::sym::Expression> {
  std::size_t operator()(const lambdavac::sym::Expression& e) const { return e.hash(); }
};

#endif  // LAMBDAVAC_SYMCORE_EXPRESSION_HPP
