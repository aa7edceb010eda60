#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gausscong/laurent.hpp"
#include "gausscong/rational.hpp"

namespace gausscong {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(std::initializer_list<Rational> coefficients);

  static UPoly monomial(std::size_t degree, const Rational& c = 1);
  /// Requires nvars == 1 and no negative exponents.
  static UPoly from_laurent(const LaurentPolynomial& p);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational constant_term() const { return coefficient(0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;
  LaurentPolynomial to_laurent(std::size_t nvars = 1, std::size_t var = 0) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly gcd;  // monic
  UPoly s;    // s*a + t*b = gcd
  UPoly t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Yun's algorithm: monic squarefree parts with their multiplicities.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& f);

/// Univariate Laurent polynomial written as x^shift * poly with poly(0) != 0.
struct UnivariateLaurent {
  std::int64_t shift = 0;
  UPoly poly;
};
UnivariateLaurent split_monomial(const LaurentPolynomial& p);

struct UnivariateFactor {
  UPoly factor;  // irreducible, integer primitive, positive leading coefficient
  unsigned multiplicity = 1;
};

struct UnivariateFactorization {
  Rational unit;
  std::vector<UnivariateFactor> factors;  // sorted by (degree, coefficients)

  UPoly expand() const;
};

/// Complete factorization over Q; throws Error(kZeroInput) for u = 0.
UnivariateFactorization factor_univariate(const UPoly& u);

struct PartialFractionTerm {
  UPoly factor;  // irreducible factor of the denominator
  unsigned power = 1;
  UPoly numerator;  // degree < degree(factor)
};

struct PartialFractions {
  UPoly polynomial_part;
  std::vector<PartialFractionTerm> terms;

  /// Recombined p/q as (numerator, denominator).
  std::pair<UPoly, UPoly> recombine() const;
};

/// Decomposition of p/q over the irreducible factorization of q.
PartialFractions partial_fractions(const UPoly& p, const UPoly& q);

}  // namespace gausscong
