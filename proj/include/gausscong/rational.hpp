#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gausscong {

using Integer = mpz_class;
/// Canonical by construction: denominator > 0, gcd(num, den) = 1, zero is 0/1.
using Rational = mpq_class;

/// Always "num/den", e.g. "3/1", "-1/2". Used by dumps and JSON.
std::string to_fraction_string(const Rational& q);
/// "3", "-1/2": integers without the unit denominator. Used by polynomial text.
std::string to_short_string(const Rational& q);
/// Accepts "a", "-a", "a/b". Throws Error(kInvalidArgument) on malformed input or b = 0.
Rational parse_rational(const std::string& text);

Integer integer_lcm(const Integer& a, const Integer& b);

/// Trial-division factorization into distinct primes (ascending). |n| must be nonzero.
std::vector<Integer> distinct_prime_factors(Integer n);

bool is_prime(std::uint64_t n);

}  // namespace gausscong
