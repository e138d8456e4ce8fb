#ifndef LAMBDAVAC_ERRORS_HPP
#define LAMBDAVAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac {

/// Evaluation hit a symbol with no bound value.
class UnboundSymbolError : public std::runtime_error {
 public:
  explicit UnboundSymbolError(std::string symbol)
      : std::runtime_error("unbound symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Evaluation produced a non-finite value; carries the subexpression that did it.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& what, sym::Expression offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const sym::Expression& offending() const { return offending_; }

 private:
  sym::Expression offending_;
};

/// Every sample of a probabilistic zero test hit a domain error.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure; offset is a 0-based byte offset into the parsed text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        message_(message),
        offset_(offset) {}
  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Structurally valid input that violates a semantic constraint.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Metric outside the block layout the canonical null tetrad is built for.
class UnsupportedStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Catalog lookups and catalog parameter constraints.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lambdavac

#endif  // LAMBDAVAC_ERRORS_HPP
