#include "gausscong/univariate.hpp"

#include <algorithm>

#include "gausscong/error.hpp"

namespace gausscong {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_laurent(const LaurentPolynomial& p) {
  if (p.nvars() != 1) throw Error(ErrorCode::kVariableMismatch, "expected a univariate polynomial");
  if (p.is_zero()) return {};
  const auto lo = p.min_exponents()[0];
  if (lo < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent in polynomial " + p.to_string());
  std::vector<Rational> v(static_cast<std::size_t>(p.max_exponents()[0]) + 1);
  for (const auto& [k, c] : p.terms()) v[static_cast<std::size_t>(k[0])] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) l = integer_lcm(l, c.get_den());
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, Integer(c * l));
  Rational scale(l, g);
  scale.canonicalize();
  if (leading() < 0) scale = -scale;
  return *this * scale;
}

LaurentPolynomial UPoly::to_laurent(std::size_t nvars, std::size_t var) const {
  LaurentPolynomial p(nvars);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    ExponentVector k(nvars);
    k[var] = static_cast<std::int64_t>(i);
    p.add_term(k, coeffs_[i]);
  }
  return p;
}

std::string UPoly::to_string() const { return to_laurent().to_string(); }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = Rational(1) / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Rational q = rem[i] * inv;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coefficient(j);
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0{Rational(1)}, s1;
  UPoly t0, t1{Rational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
  const Rational inv = Rational(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const UPoly fm = f.monic();
  const UPoly d = fm.derivative();
  UPoly a = gcd(fm, d);
  UPoly b = divmod(fm, a).first;
  UPoly c = divmod(d, a).first;
  UPoly e = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

UnivariateLaurent split_monomial(const LaurentPolynomial& p) {
  if (p.nvars() != 1) throw Error(ErrorCode::kVariableMismatch, "expected a univariate polynomial");
  if (p.is_zero()) return {};
  const auto lo = p.min_exponents()[0];
  return {lo, UPoly::from_laurent(p.shifted(ExponentVector{-lo}))};
}

UPoly UnivariateFactorization::expand() const {
  UPoly r{unit};
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.factor;
  }
  return r;
}

std::pair<UPoly, UPoly> PartialFractions::recombine() const {
  UPoly den{Rational(1)};
  for (const auto& t : terms) {
    for (unsigned i = 0; i < t.power; ++i) den = den * t.factor;
  }
  UPoly num = polynomial_part * den;
  for (const auto& t : terms) {
    UPoly rest{Rational(1)};
    for (const auto& u : terms) {
      if (&u == &t) continue;
      for (unsigned i = 0; i < u.power; ++i) rest = rest * u.factor;
    }
    num = num + t.numerator * rest;
  }
  if (num.is_zero()) return {UPoly(), UPoly{Rational(1)}};
  // Terms over powers of one factor share it, so reduce.
  const UPoly g = gcd(num, den);
  return {divmod(num, g).first, divmod(den, g).first};
}

PartialFractions partial_fractions(const UPoly& p, const UPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "partial fractions with zero denominator");
  PartialFractions out;
  auto [quo, rem] = divmod(p, q);
  out.polynomial_part = quo;
  if (rem.is_zero()) return out;
  const UnivariateFactorization fact = factor_univariate(q);
  std::vector<UPoly> blocks;
  for (const auto& f : fact.factors) {
    UPoly b{Rational(1)};
    for (unsigned i = 0; i < f.multiplicity; ++i) b = b * f.factor;
    blocks.push_back(std::move(b));
  }
  const UPoly scaled = rem * (Rational(1) / fact.unit);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    UPoly others{Rational(1)};
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j != i) others = others * blocks[j];
    }
    // others is invertible modulo blocks[i] since the factors are coprime.
    const ExtendedGcd eg = extended_gcd(others, blocks[i]);
    UPoly n = divmod(scaled * eg.s, blocks[i]).second;
    const auto& f = fact.factors[i];
    std::vector<PartialFractionTerm> local;
    for (unsigned j = 0; j < f.multiplicity && !n.is_zero(); ++j) {
      auto [next, digit] = divmod(n, f.factor);
      if (!digit.is_zero()) local.push_back({f.factor, f.multiplicity - j, digit});
      n = std::move(next);
    }
    for (auto& t : local) out.terms.push_back(std::move(t));
  }
  return out;
}

}  // namespace gausscong
