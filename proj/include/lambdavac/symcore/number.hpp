#ifndef LAMBDAVAC_SYMCORE_NUMBER_HPP
#define LAMBDAVAC_SYMCORE_NUMBER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace lambdavac::sym {

/// Numeric coefficient: an exact 64-bit rational, or a double once exact
/// arithmetic would overflow.
class Number {
 public:
  Number() = default;
  Number(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Number(int value) : num_(value) {}           // NOLINT(implicit)

  /// Normalized p/q. Throws std::domain_error when q == 0.
  static Number rational(std::int64_t numerator, std::int64_t denominator);
  static Number real(double value);

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;
  bool is_integer() const;
  bool is_negative() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  /// Throws std::domain_error on division by zero.
  friend Number operator/(const Number& a, const Number& b);

  /// base^exponent when the result is representable without loss (integer
  /// exponents on exact bases); nullopt otherwise, including 0^negative.
  std::optional<Number> pow(const Number& exponent) const;

  Number abs() const { return is_negative() ? -*this : *this; }

  /// Structural equality: exact and inexact numbers never compare equal.
  friend bool operator==(const Number& a, const Number& b);
  /// Total order used for canonical sorting (by value, exact before inexact on ties).
  friend std::strong_ordering compare(const Number& a, const Number& b);

  std::size_t hash() const;
  /// "3", "-1/3", or a %.17g rendering for inexact values.
  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
};

std::strong_ordering compare(const Number& a, const Number& b);

}  // namespace lambdavac::sym

#endif  // LAMBDAVAC_SYMCORE_NUMBER_HPP
