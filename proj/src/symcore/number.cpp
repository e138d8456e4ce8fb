#include "lambdavac/symcore/number.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lambdavac::sym {
namespace {

__extension__ using Wide = __int128;

constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr Wide kMin = std::numeric_limits<std::int64_t>::min();

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den; falls back to a double when the reduced pair overflows.
Number from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) {
    return Number::real(static_cast<double>(num) / static_cast<double>(den));
  }
  return Number::rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Number Number::rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Number n;
  Wide num = numerator;
  Wide den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax) {
    return real(static_cast<double>(num) / static_cast<double>(den));
  }
  n.num_ = static_cast<std::int64_t>(num);
  n.den_ = static_cast<std::int64_t>(den);
  return n;
}

Number Number::real(double value) {
  Number n;
  n.exact_ = false;
  n.num_ = 0;
  n.den_ = 1;
  n.real_ = value == 0.0 ? 0.0 : value;  // drop negative zero
  return n;
}

double Number::to_double() const {
  if (!exact_) return real_;
  return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Number::is_zero() const { return exact_ ? num_ == 0 : real_ == 0.0; }
bool Number::is_one() const { return exact_ ? (num_ == 1 && den_ == 1) : real_ == 1.0; }
bool Number::is_minus_one() const { return exact_ ? (num_ == -1 && den_ == 1) : real_ == -1.0; }
bool Number::is_integer() const {
  return exact_ ? den_ == 1 : (std::isfinite(real_) && std::floor(real_) == real_);
}
bool Number::is_negative() const { return exact_ ? num_ < 0 : real_ < 0.0; }

Number Number::operator-() const {
  if (!exact_) return real(-real_);
  return from_wide(-static_cast<Wide>(num_), den_);
}

Number operator+(const Number& a, const Number& b) {
  if (!a.exact_ || !b.exact_) return Number::real(a.to_double() + b.to_double());
  return from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                   static_cast<Wide>(a.den_) * b.den_);
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number operator*(const Number& a, const Number& b) {
  if (!a.exact_ || !b.exact_) return Number::real(a.to_double() * b.to_double());
  return from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Number operator/(const Number& a, const Number& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.exact_ || !b.exact_) return Number::real(a.to_double() / b.to_double());
  return from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::optional<Number> Number::pow(const Number& exponent) const {
  if (!exponent.is_integer()) return std::nullopt;
  const double e = exponent.to_double();
  if (std::abs(e) > 256) return std::nullopt;
  auto n = static_cast<long>(e);
  if (is_zero()) {
    if (n < 0) return std::nullopt;
    return n == 0 ? Number(1) : Number(0);
  }
  if (!exact_) {
    double r = std::pow(real_, static_cast<double>(n));
    if (!std::isfinite(r)) return std::nullopt;
    return real(r);
  }
  Number base = *this;
  if (n < 0) {
    base = Number(1) / base;
    n = -n;
  }
  Number result(1);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const Number& a, const Number& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.real_ == b.real_;
}

std::strong_ordering compare(const Number& a, const Number& b) {
  if (a.exact_ && b.exact_) {
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  double x = a.to_double();
  double y = b.to_double();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  if (a.exact_ != b.exact_) return a.exact_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Number::hash() const {
  if (!exact_) return std::hash<double>{}(real_) ^ 0x9e3779b97f4a7c15ULL;
  std::size_t h = std::hash<std::int64_t>{}(num_);
  h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Number::to_string() const {
  if (!exact_) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", real_);
    return buffer;
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace lambdavac::sym
