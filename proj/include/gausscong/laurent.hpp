#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gausscong/exponent.hpp"
#include "gausscong/rational.hpp"

namespace gausscong {

/// Sparse Laurent polynomial in x1..xn with exact rational coefficients.
///
/// Terms are kept in graded-lex order and zero coefficients are never stored,
/// so iteration and text rendering are reproducible.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLex>;

  LaurentPolynomial() : LaurentPolynomial(1) {}
  explicit LaurentPolynomial(std::size_t nvars);
  LaurentPolynomial(std::size_t nvars, std::initializer_list<std::pair<ExponentVector, Rational>> terms);

  static LaurentPolynomial constant(std::size_t nvars, const Rational& c);
  static LaurentPolynomial monomial(std::size_t nvars, const ExponentVector& k, const Rational& c = 1);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const ExponentVector& k) const;
  std::vector<ExponentVector> support() const;
  bool is_constant() const noexcept;

  /// Adds c·x^k in place, dropping the term if it cancels. Builder-style only.
  void add_term(const ExponentVector& k, const Rational& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial pow(unsigned e) const;
  /// Multiplication by x^k.
  LaurentPolynomial shifted(const ExponentVector& k) const;
  LaurentPolynomial derivative(std::size_t i) const;
  /// Euler operator x_i d/dx_i.
  LaurentPolynomial euler(std::size_t i) const;
  /// Keeps the terms whose exponent satisfies pred.
  template <typename Pred>
  LaurentPolynomial filtered(Pred pred) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [k, c] : terms_) {
      if (pred(k)) r.terms_.emplace_hint(r.terms_.end(), k, c);
    }
    return r;
  }

  /// Componentwise min / max exponents over the support (zero polynomial: zeros).
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  /// Lcm of coefficient denominators.
  Integer denominator_lcm() const;
  /// Gcd of coefficient numerators (0 for the zero polynomial).
  Integer numerator_gcd() const;
  /// Positive content: gcd of numerators / lcm of denominators.
  Rational content() const;
  /// Exact evaluation at a point with nonzero entries where negative exponents occur.
  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text: graded-lex terms, variables x1..xn, rational coefficients num/den.
  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Exact product; throws Error(kVariableMismatch) if nvars differ.
LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace gausscong
