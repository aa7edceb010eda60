#pragma once

#include <span>
#include <string>
#include <vector>

#include "gausscong/laurent.hpp"

namespace gausscong {

/// P/Q with integer-primitive sides and a positive coefficient at the canonical
/// vertex of Q. Univariate inputs are additionally reduced to lowest terms.
class RationalFunction {
 public:
  /// The constant 0 in one variable.
  RationalFunction() : RationalFunction(LaurentPolynomial(1)) {}
  /// A Laurent polynomial over 1.
  explicit RationalFunction(const LaurentPolynomial& p);
  /// Normalizes p/q; throws Error(kZeroDenominator) if q = 0.
  RationalFunction(const LaurentPolynomial& p, const LaurentPolynomial& q);

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const LaurentPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws Error(kZeroDenominator) when b = 0.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Structural equality of the normalized representation.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction derivative(std::size_t i) const;
  /// x_i d/dx_i.
  RationalFunction euler(std::size_t i) const;
  /// Exact value; throws Error(kZeroDenominator) if Q vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  /// "P" when Q = 1, otherwise "(P)/(Q)".
  std::string to_string() const;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

RationalFunction normalize(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Equality as rational functions: P_a Q_b = P_b Q_a.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

/// First graded-lex term of q; always a vertex of N(q).
ExponentVector canonical_vertex(const LaurentPolynomial& q);

/// f(g_1, ..., g_n) where f has n variables and every g_j shares one variable count.
/// Throws Error(kUndefinedSubstitution) if the substituted denominator vanishes.
RationalFunction compose(const RationalFunction& f, std::span<const RationalFunction> g);

/// Lift a polynomial in nvars variables into a larger ring, variable i mapping to x_{map[i]}.
LaurentPolynomial embed(const LaurentPolynomial& p, std::size_t nvars, std::span<const std::size_t> map);
RationalFunction embed(const RationalFunction& f, std::size_t nvars, std::span<const std::size_t> map);

}  // namespace gausscong
