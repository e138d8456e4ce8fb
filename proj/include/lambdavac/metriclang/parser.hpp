#ifndef LAMBDAVAC_METRICLANG_PARSER_HPP
#define LAMBDAVAC_METRICLANG_PARSER_HPP

#include <string_view>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::metriclang {

/// Parses the expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?          right-associative
///   primary := number | identifier | ('sin' | 'cos') '(' expr ')' | '(' expr ')'
///
/// Numbers are decimal literals (optionally with an exponent) and are kept as
/// exact rationals when they fit; `p/q` is ordinary division of constants and
/// folds to an exact rational. `pi` is the reserved constant. Exponents must
/// reduce to numeric constants.
///
/// Throws SyntaxError with the byte offset of the offending token.
sym::Expression parse_expression(std::string_view text);

/// Parses a numeric constant expression ("1/2", "0.3", "-3"). Throws
/// SyntaxError when the text does not reduce to a number.
sym::Number parse_number(std::string_view text);

}  // namespace lambdavac::metriclang

#endif  // LAMBDAVAC_METRICLANG_PARSER_HPP
