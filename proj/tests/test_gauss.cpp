#include <random>

#include "doctest.h"
#include "gausscong/error.hpp"
#include "gausscong/gauss.hpp"
#include "support.hpp"

using namespace gausscong;
using gctest::rf;

namespace {

GaussCheckConfig config(std::vector<std::uint64_t> primes, int r_max, int strength = 1) {
  GaussCheckConfig c;
  c.primes = std::move(primes);
  c.r_max = r_max;
  c.strength = strength;
  return c;
}

}  // namespace

TEST_CASE("valuation examples") {
  CHECK(p_adic_valuation(Rational(50), 5) == 2);
  CHECK(p_adic_valuation(Rational(2, 9), 3) == -2);
  CHECK(p_adic_valuation(Rational(0), 7) == kInfiniteValuation);
  CHECK(p_adic_valuation(Rational(-7, 4), 2) == -2);
  CHECK_THROWS_AS(p_adic_valuation(Rational(3), 9), Error);
}

TEST_CASE("excluded prime examples") {
  CHECK(excluded_primes(rf("1", "(1-x1-x2)*(1-x3-x4)-x1*x2*x3*x4", 4), ExponentVector(4)).empty());
  CHECK(excluded_primes(rf("1", "3-x", 1), ExponentVector{0}) == std::vector<std::uint64_t>{3});
  CHECK(excluded_primes(rf("1", "6-x-y", 2), ExponentVector{0, 0}) == std::vector<std::uint64_t>{2, 3});
  CHECK(excluded_primes(rf("1/2", "3-x", 1), ExponentVector{0}) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("Delannoy function holds") {
  const auto rep = check_gauss(rf("1", "1-x-y-x*y", 2), ExponentVector{0, 0}, config({2, 3, 5}, 2), 60);
  REQUIRE(rep.primes.size() == 3);
  for (const auto& p : rep.primes) {
    CHECK(p.verdict == Verdict::kHolds);
    CHECK(p.checked_count > 0);
  }
  CHECK_FALSE(rep.certified);
}

TEST_CASE("Apery supercongruence at (5,5,5,5)") {
  const auto f = rf("1", "(1-x1-x2)*(1-x3-x4)-x1*x2*x3*x4", 4);
  const auto s = expand_at_vertex(f, ExponentVector(4), 20);
  const Rational d = s.coefficient(ExponentVector{5, 5, 5, 5}) - s.coefficient(ExponentVector{1, 1, 1, 1});
  CHECK(p_adic_valuation(d, 5) >= 3);
  GaussCheckConfig cfg = config({5}, 1, 3);
  cfg.m_budget = 4;
  const auto rep = check_gauss(s, {}, cfg);
  CHECK(rep.primes[0].verdict == Verdict::kHolds);
}

TEST_CASE("powers of two at p = 3") {
  const auto f = rf("1", "1-2*x", 1);
  const auto s = expand_at_vertex(f, ExponentVector{0}, 9);
  CHECK(s.coefficient(ExponentVector{9}) - s.coefficient(ExponentVector{3}) == 504);
  CHECK(p_adic_valuation(Rational(504), 3) == 2);
  GaussCheckConfig cfg = config({3}, 2);
  cfg.m_budget = 1;
  const auto rep = check_gauss(f, ExponentVector{0}, cfg, 9);
  CHECK(rep.primes[0].verdict == Verdict::kHolds);
  CHECK(rep.primes[0].checked_count == 2);
}

TEST_CASE("failures, exclusions and insufficient truncation") {
  const auto bad = rf("x-2", "x+x^2", 1);
  for (std::uint64_t p : {5, 7, 11}) {
    const auto rep = check_gauss(bad, ExponentVector{1}, config({p}, 1), 30);
    REQUIRE(rep.primes[0].verdict == Verdict::kFails);
    REQUIRE(rep.primes[0].witness.has_value());
    CHECK(rep.primes[0].witness->valuation_found < rep.primes[0].witness->valuation_required);
  }
  const auto excl = check_gauss(rf("1", "3-x", 1), ExponentVector{0}, config({2, 3}, 1), 20);
  CHECK(excl.primes[1].verdict == Verdict::kExcluded);
  CHECK(excl.primes[0].verdict == Verdict::kHolds);

  const auto few = check_gauss(rf("1", "1-x-y", 2), ExponentVector{0, 0}, config({13}, 1), 5);
  CHECK(few.primes[0].verdict == Verdict::kInsufficientTruncation);
  CHECK(few.any_insufficient());

  // coefficients (1/2)^k are not 2-integral
  const auto half = rf("1", "1-x/2", 1);
  const auto s = expand_at_vertex(half, ExponentVector{0}, 20);
  const auto rep = check_gauss(s, {}, config({2}, 1));
  REQUIRE(rep.primes[0].witness.has_value());
  CHECK(rep.primes[0].witness->reason == "non-integral");

  CHECK_THROWS_AS(check_gauss(half, ExponentVector{0}, config({4}, 1), 10), Error);
  CHECK_THROWS_AS(check_gauss(half, ExponentVector{0}, config({3, 3}, 1), 10), Error);
}

TEST_CASE("integer power oracle examples") {
  CHECK(check_integer_power_congruence(Integer(2), 3, 2, 1));
  CHECK(check_integer_power_congruence(Integer(0), 5, 3, 4));
  CHECK(check_integer_power_congruence(Integer(1), 5, 3, 4));
  CHECK(check_integer_power_congruence(Integer(10), 5, 1, 1));
  CHECK(check_integer_power_congruence(Integer(-7), 3, 3, 4));
  CHECK_THROWS_AS(check_integer_power_congruence(Integer(2), 6, 1, 1), Error);
}

TEST_CASE("property: strength monotonicity and parallel determinism") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto q = gctest::random_laurent(rng, 2, 3, 1, 2, true) + LaurentPolynomial::constant(2, 1);
    if (q.size() < 2) continue;
    const RationalFunction f(LaurentPolynomial::constant(2, 1), q);
    const auto v = canonical_vertex(f.denominator());
    const auto s = expand_at_vertex(f, v, 24);
    const auto ex = excluded_primes(f, v);
    for (int strength = 1; strength <= 3; ++strength) {
      GaussCheckConfig hi = config({2, 3, 5}, 2, strength);
      const auto rh = check_gauss(s, ex, hi);
      for (int lower = 1; lower < strength; ++lower) {
        const auto rl = check_gauss(s, ex, config({2, 3, 5}, 2, lower));
        for (std::size_t i = 0; i < rh.primes.size(); ++i) {
          if (rh.primes[i].verdict == Verdict::kHolds) CHECK(rl.primes[i].verdict == Verdict::kHolds);
        }
      }
      hi.jobs = 3;
      const auto rp = check_gauss(s, ex, hi);
      for (std::size_t i = 0; i < rh.primes.size(); ++i) {
        CHECK(rp.primes[i].verdict == rh.primes[i].verdict);
        CHECK(rp.primes[i].checked_count == rh.primes[i].checked_count);
      }
    }
  }
}

TEST_CASE("property: engine agrees with the integer power oracle on 1/(1 - a x)") {
  for (long a = -6; a <= 6; ++a) {
    if (a == 0) continue;
    LaurentPolynomial q(1);
    q.add_term(ExponentVector{0}, 1);
    q.add_term(ExponentVector{1}, Rational(-a));
    const RationalFunction f(LaurentPolynomial::constant(1, 1), q);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      GaussCheckConfig cfg = config({p}, 2);
      cfg.m_budget = 2;
      const auto rep = check_gauss(f, ExponentVector{0}, cfg, static_cast<std::int64_t>(2 * p * p));
      CHECK((rep.primes[0].verdict == Verdict::kHolds) == check_integer_power_congruence(Integer(a), p, 2, 2));
    }
  }
}
