#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gausscong/ratfun.hpp"

namespace gausscong {

/// Syntax tree for rational-function expressions.
struct Expr {
  enum class Kind { kInteger, kVariable, kAdd, kSub, kMul, kDiv, kNeg, kPow };

  Kind kind = Kind::kInteger;
  Integer value;             // kInteger literal, kPow exponent
  std::size_t variable = 0;  // zero-based index for kVariable
  std::vector<Expr> children;
  std::int64_t offset = 0;  // byte offset of the token that produced the node
};

/// Grammar, with ^ binding tighter than unary minus, then * /, then + -:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' exponent)? | '-' factor
///   base   := integer | variable | '(' expr ')'
/// exponent is a signed integer literal, optionally parenthesized; a^b^c groups
/// to the right. Variables are x1..x8 and the aliases x, y, z, w.
/// Throws ParseError with a byte offset.
Expr parse_expression(std::string_view text);

/// Number of variables needed: the largest variable index used (0 if none).
std::size_t expression_nvars(const Expr& e);

/// Evaluates in nvars variables; throws ParseError on division by zero.
RationalFunction evaluate(const Expr& e, std::size_t nvars);

/// Parse plus evaluate.
RationalFunction parse_rational_function(std::string_view text, std::size_t nvars);

/// Parses text whose value is a Laurent polynomial (denominator a monomial).
LaurentPolynomial parse_laurent(std::string_view text, std::size_t nvars);

/// f as a Laurent polynomial; throws Error(kInvalidArgument) if its denominator is not a monomial.
LaurentPolynomial as_laurent(const RationalFunction& f);

}  // namespace gausscong
