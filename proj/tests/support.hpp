#pragma once

// Shared helpers for the test binaries: parsing shortcuts, random generators
// and small independent oracles.

#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "gausscong/expr.hpp"
#include "gausscong/linalg.hpp"
#include "gausscong/univariate.hpp"

namespace gctest {

using namespace gausscong;

inline LaurentPolynomial poly(const std::string& s, std::size_t n) { return parse_laurent(s, n); }

inline UPoly upoly(const std::string& s) { return UPoly::from_laurent(parse_laurent(s, 1)); }

inline RationalFunction rf(const std::string& num, const std::string& den, std::size_t n) {
  return RationalFunction(poly(num, n), poly(den, n));
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Up to `terms` terms, exponents in [-maxexp, maxexp], nonzero coefficients in [-maxcoef, maxcoef].
inline LaurentPolynomial random_laurent(std::mt19937_64& rng, std::size_t nvars, int terms, int maxexp,
                                        int maxcoef, bool nonnegative = false) {
  LaurentPolynomial p(nvars);
  const int count = static_cast<int>(uniform(rng, 1, terms));
  for (int t = 0; t < count; ++t) {
    ExponentVector k(nvars);
    for (std::size_t i = 0; i < nvars; ++i) k[i] = uniform(rng, nonnegative ? 0 : -maxexp, maxexp);
    std::int64_t c = 0;
    while (c == 0) c = uniform(rng, -maxcoef, maxcoef);
    p.add_term(k, Rational(static_cast<long>(c)));
  }
  return p;
}

/// Degree exactly `degree` (when degree >= 0) with integer coefficients in [-maxcoef, maxcoef].
inline UPoly random_upoly(std::mt19937_64& rng, int degree, int maxcoef) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = Rational(static_cast<long>(uniform(rng, -maxcoef, maxcoef)));
  while (c.back() == 0) c.back() = Rational(static_cast<long>(uniform(rng, -maxcoef, maxcoef)));
  return UPoly(std::move(c));
}

/// Rational root test by brute force over divisors of the end coefficients.
inline bool has_rational_root(const UPoly& u) {
  const UPoly p = u.primitive();
  if (p.constant_term() == 0) return true;
  const long a0 = std::abs(p.constant_term().get_num().get_si());
  const long an = std::abs(p.leading().get_num().get_si());
  for (long r = 1; r <= a0; ++r) {
    if (a0 % r) continue;
    for (long s = 1; s <= an; ++s) {
      if (an % s) continue;
      if (p.evaluate(Rational(r, s)) == 0 || p.evaluate(Rational(-r, s)) == 0) return true;
    }
  }
  return false;
}

/// Discriminant of a polynomial with integer coefficients, via the Sylvester matrix of u and u'.
inline Integer discriminant(const UPoly& u) {
  const int d = u.degree();
  if (d < 2) return 1;
  const UPoly du = u.derivative();
  const int n = 2 * d - 1;
  IntegerMatrix m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int r = 0; r < d - 1; ++r) {
    for (int i = 0; i <= d; ++i) m[r][r + i] = u.coefficient(static_cast<std::size_t>(d - i)).get_num();
  }
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i <= d - 1; ++i) m[d - 1 + r][r + i] = du.coefficient(static_cast<std::size_t>(d - 1 - i)).get_num();
  }
  return determinant(m);
}

/// Univariate P/Q with Q(0) != 0 as integer coefficient lists of the reduced form.
struct IntegerQuotient {
  std::vector<Integer> p;
  std::vector<Integer> q;
};

inline IntegerQuotient integer_quotient(const RationalFunction& f) {
  const auto num = split_monomial(f.numerator());
  const auto den = split_monomial(f.denominator());
  const std::int64_t shift = num.shift - den.shift;
  if (shift < 0) throw std::runtime_error("pole at 0");
  IntegerQuotient out;
  const Integer scale = integer_lcm(f.numerator().denominator_lcm(), f.denominator().denominator_lcm());
  out.p.assign(static_cast<std::size_t>(shift), Integer(0));
  for (const auto& c : num.poly.coefficients()) out.p.push_back(Rational(c * scale).get_num());
  for (const auto& c : den.poly.coefficients()) out.q.push_back(Rational(c * scale).get_num());
  Integer g = 0;
  for (const auto& z : out.p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  for (const auto& z : out.q) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  for (auto& z : out.p) z /= g;
  for (auto& z : out.q) z /= g;
  return out;
}

/// Primes where a univariate P/Q may misbehave: divisors of Q(0), lc(Q) and the
/// discriminant of the squarefree part of Q, with Q the integer denominator of the reduced form.
inline std::set<std::uint64_t> exceptional_primes(const RationalFunction& f) {
  const auto iq = integer_quotient(f);
  const auto den = split_monomial(f.denominator());
  UPoly sqf{Rational(1)};
  for (const auto& [part, mult] : squarefree_decomposition(den.poly)) sqf = sqf * part;
  sqf = sqf.primitive();
  std::set<std::uint64_t> out;
  for (const Integer& z : {iq.q.front(), iq.q.back(), discriminant(sqf)}) {
    if (z == 0) continue;
    for (const auto& p : distinct_prime_factors(z)) out.insert(p.get_ui());
  }
  return out;
}

inline std::int64_t mod(const Integer& z, std::int64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

/// Gauss congruences a_{m p^r} = a_{m p^(r-1)} mod p^r for all indices m p^r <= max_index,
/// from the power series of p/q reduced modulo the largest power of p within max_index.
/// Requires p not dividing q[0].
inline bool brute_force_gauss(const IntegerQuotient& f, std::int64_t p, std::int64_t max_index) {
  std::int64_t modulus = p;
  while (modulus * p <= max_index) modulus *= p;
  std::vector<std::int64_t> q(f.q.size()), num(static_cast<std::size_t>(max_index) + 1, 0);
  for (std::size_t i = 0; i < f.q.size(); ++i) q[i] = mod(f.q[i], modulus);
  for (std::size_t i = 0; i < f.p.size() && i < num.size(); ++i) num[i] = mod(f.p[i], modulus);
  Integer inv;
  const Integer q0(static_cast<long>(q[0])), mz(static_cast<long>(modulus));
  if (mpz_invert(inv.get_mpz_t(), q0.get_mpz_t(), mz.get_mpz_t()) == 0) throw std::runtime_error("q(0) not invertible");
  const std::int64_t q0inv = inv.get_si();
  std::vector<std::int64_t> a(num.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::int64_t s = num[n];
    for (std::size_t i = 1; i < q.size() && i <= n; ++i) s = (s - q[i] * a[n - i]) % modulus;
    s = ((s % modulus) + modulus) % modulus;
    a[n] = s * q0inv % modulus;
  }
  for (std::int64_t lower = 1, pr = p; lower * p <= max_index; lower *= p, pr *= p) {
    for (std::int64_t m = 1; m * lower * p <= max_index; ++m) {
      if ((a[static_cast<std::size_t>(m * lower * p)] - a[static_cast<std::size_t>(m * lower)]) % pr != 0) return false;
    }
  }
  return true;
}

/// Empirical verdict: every non-exceptional prime up to max_prime passes.
inline bool brute_force_verdict(const RationalFunction& f, std::int64_t max_prime, std::int64_t max_index) {
  const auto iq = integer_quotient(f);
  const auto bad = exceptional_primes(f);
  for (std::int64_t p = 2; p <= max_prime; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p)) || bad.count(static_cast<std::uint64_t>(p))) continue;
    if (!brute_force_gauss(iq, p, max_index)) return false;
  }
  return true;
}

}  // namespace gctest
