#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gausscong/series.hpp"

namespace gausscong {

/// Valuation reported for 0.
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

/// Throws Error(kNotPrime) unless p is prime.
std::int64_t p_adic_valuation(const Rational& a, std::uint64_t p);

/// Primes dividing the vertex coefficient of Q or the content of P (ascending).
std::vector<std::uint64_t> excluded_primes(const RationalFunction& f, const ExponentVector& v);

struct GaussCheckConfig {
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  int r_max = 2;
  int strength = 1;
  /// Cap on the degree of base vectors m; defaults to bound / (smallest prime)^2.
  std::optional<std::int64_t> m_budget;
  /// Worker threads for the per-prime fan-out.
  unsigned jobs = 1;
};

enum class Verdict { kHolds, kFails, kExcluded, kInsufficientTruncation };

const char* verdict_name(Verdict v) noexcept;

struct GaussWitness {
  ExponentVector m;
  int r = 0;
  std::int64_t valuation_found = 0;
  std::int64_t valuation_required = 0;
  /// "valuation" for a congruence failure, "non-integral" for a coefficient with negative valuation.
  std::string reason;
};

struct PrimeReport {
  std::uint64_t prime = 0;
  Verdict verdict = Verdict::kHolds;
  std::optional<GaussWitness> witness;  // first failure in (r, graded-lex m) order
  std::uint64_t checked_count = 0;      // pairs with at least one nonzero side
};

struct GaussReport {
  int strength = 1;
  int r_max = 1;
  std::int64_t bound = 0;
  std::int64_t m_budget = 0;
  bool certified = false;  // sampling never certifies the Gauss property
  std::vector<PrimeReport> primes;

  /// Every non-excluded prime holds.
  bool all_hold() const;
  bool any_fails() const;
  bool any_insufficient() const;
  const PrimeReport* find(std::uint64_t p) const;
};

/// Checks nu_p(f_{m p^r} - f_{m p^(r-1)}) >= strength * r on the expansion at v.
/// Throws kNotVertex, kNotPrime, kInvalidArgument.
GaussReport check_gauss(const RationalFunction& f, const ExponentVector& v, const GaussCheckConfig& cfg,
                        std::int64_t bound);

/// Same check on a given series with an explicit excluded set.
GaussReport check_gauss(const TruncatedLaurentSeries& s, const std::vector<std::uint64_t>& excluded,
                        const GaussCheckConfig& cfg);

/// a^(m p^r) = a^(m p^(r-1)) mod p^r for all 1 <= m <= m_max, 1 <= r <= r_max.
bool check_integer_power_congruence(const Integer& a, std::uint64_t p, int r_max, int m_max);

}  // namespace gausscong
