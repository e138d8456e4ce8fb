#include "lambdavac/metriclang/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <string>

#include "lambdavac/errors.hpp"

namespace lambdavac::metriclang {
namespace {

using sym::Expression;
using sym::Number;

enum class TokenKind { kNumber, kIdentifier, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::size_t offset = 0;
  std::string_view text;
};

std::string describe(const Token& t) {
  if (t.kind == TokenKind::kEnd) return "end of input";
  return "'" + std::string(t.text) + "'";
}

// Decimal literal to an exact rational when mantissa and scale fit in 64 bits.
Number number_from_literal(std::string_view literal) {
  std::string digits;
  std::int64_t scale = 0;
  std::size_t i = 0;
  bool seen_point = false;
  for (; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == '.') {
      seen_point = true;
      continue;
    }
    if (c == 'e' || c == 'E') break;
    digits.push_back(c);
    if (seen_point) --scale;
  }
  std::int64_t exponent = 0;
  if (i < literal.size()) exponent = std::strtoll(std::string(literal.substr(i + 1)).c_str(), nullptr, 10);
  scale += exponent;

  std::size_t first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  if (digits.size() <= 18 && scale > -19 && scale < 19) {
    std::int64_t mantissa = std::stoll(digits);
    std::int64_t power = 1;
    for (std::int64_t k = 0; k < (scale < 0 ? -scale : scale); ++k) power *= 10;
    if (scale >= 0) {
      if (mantissa <= std::numeric_limits<std::int64_t>::max() / power) return Number(mantissa * power);
    } else {
      return Number::rational(mantissa, power);
    }
  }
  return Number::real(std::strtod(std::string(literal).c_str(), nullptr));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    auto single = [&](TokenKind k) {
      t.kind = k;
      t.text = text_.substr(pos_, 1);
      ++pos_;
      return t;
    };
    switch (c) {
      case '+': return single(TokenKind::kPlus);
      case '-': return single(TokenKind::kMinus);
      case '*': return single(TokenKind::kStar);
      case '/': return single(TokenKind::kSlash);
      case '^': return single(TokenKind::kCaret);
      case '(': return single(TokenKind::kLParen);
      case ')': return single(TokenKind::kRParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      bool digits = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        digits = true;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
          digits = true;
        }
      }
      if (!digits) throw SyntaxError("malformed number", start);
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t mark = pos_++;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw SyntaxError("malformed exponent", mark);
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      t.kind = TokenKind::kNumber;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      t.kind = TokenKind::kIdentifier;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Expression parse() {
    if (current_.kind == TokenKind::kEnd) throw SyntaxError("empty expression", current_.offset);
    Expression e = expression();
    if (current_.kind == TokenKind::kRParen) throw SyntaxError("unbalanced ')'", current_.offset);
    if (current_.kind != TokenKind::kEnd) throw SyntaxError("unexpected token " + describe(current_), current_.offset);
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  Expression expression() {
    Expression acc = term();
    while (current_.kind == TokenKind::kPlus || current_.kind == TokenKind::kMinus) {
      bool minus = current_.kind == TokenKind::kMinus;
      advance();
      Expression rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Expression term() {
    Expression acc = unary();
    while (current_.kind == TokenKind::kStar || current_.kind == TokenKind::kSlash) {
      const bool divide = current_.kind == TokenKind::kSlash;
      const std::size_t op = current_.offset;
      advance();
      Expression rhs = unary();
      try {
        acc = divide ? acc / rhs : acc * rhs;
      } catch (const std::domain_error&) {
        throw SyntaxError("division by zero", op);
      }
    }
    return acc;
  }

  Expression unary() {
    if (current_.kind == TokenKind::kMinus) {
      advance();
      return -unary();
    }
    if (current_.kind == TokenKind::kPlus) {
      advance();
      return unary();
    }
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (current_.kind != TokenKind::kCaret) return base;
    const std::size_t caret = current_.offset;
    advance();
    Expression exponent = unary();
    if (!exponent.is_constant()) throw SyntaxError("exponent must be a numeric constant", caret + 1);
    try {
      return sym::pow(base, exponent);
    } catch (const std::domain_error&) {
      throw SyntaxError("division by zero", caret);
    }
  }

  Expression primary() {
    const Token t = current_;
    switch (t.kind) {
      case TokenKind::kNumber:
        advance();
        return Expression(number_from_literal(t.text));
      case TokenKind::kIdentifier: {
        advance();
        if (t.text == "sin" || t.text == "cos") {
          if (current_.kind != TokenKind::kLParen) {
            throw SyntaxError("expected '(' after " + std::string(t.text), current_.offset);
          }
          Expression arg = parenthesized();
          return t.text == "sin" ? sym::sin(arg) : sym::cos(arg);
        }
        if (current_.kind == TokenKind::kLParen) {
          throw SyntaxError("unknown function '" + std::string(t.text) + "'", t.offset);
        }
        return Expression::symbol(std::string(t.text));
      }
      case TokenKind::kLParen:
        return parenthesized();
      case TokenKind::kEnd:
        throw SyntaxError("unexpected end of input", t.offset);
      default:
        throw SyntaxError("unexpected token " + describe(t), t.offset);
    }
  }

  Expression parenthesized() {
    const std::size_t open = current_.offset;
    advance();
    if (current_.kind == TokenKind::kRParen) throw SyntaxError("empty parentheses", current_.offset);
    Expression inner = expression();
    if (current_.kind != TokenKind::kRParen) {
      if (current_.kind == TokenKind::kEnd) throw SyntaxError("unbalanced '('", open);
      throw SyntaxError("expected ')' but found " + describe(current_), current_.offset);
    }
    advance();
    return inner;
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

sym::Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

sym::Number parse_number(std::string_view text) {
  Expression e = parse_expression(text);
  if (!e.is_constant()) throw SyntaxError("expected a numeric constant", 0);
  return e.number();
}

}  // namespace lambdavac::metriclang
