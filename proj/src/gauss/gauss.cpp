#include "gausscong/gauss.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "gausscong/error.hpp"

namespace gausscong {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
}

std::int64_t valuation(const Integer& z, const Integer& p) {
  if (z == 0) return kInfiniteValuation;
  Integer rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

PrimeReport check_prime(const TruncatedLaurentSeries& s, std::uint64_t prime, const GaussCheckConfig& cfg,
                        std::int64_t m_budget, const std::vector<ExponentVector>& support) {
  PrimeReport rep;
  rep.prime = prime;
  const auto ip = static_cast<std::int64_t>(prime);
  const Integer P(static_cast<unsigned long>(prime));
  std::int64_t lower = 1;  // p^(r-1)
  for (int r = 1; r <= cfg.r_max; ++r) {
    std::int64_t upper = 0;
    if (__builtin_mul_overflow(lower, ip, &upper)) break;
    // Only m with a nonzero coefficient at m p^r or m p^(r-1) give nontrivial pairs.
    std::set<ExponentVector, GradedLex> bases;
    for (const auto& k : support) {
      if (k.divisible_by(lower)) bases.insert(k.divided_by(lower));
      if (k.divisible_by(upper)) bases.insert(k.divided_by(upper));
    }
    Integer modulus;
    mpz_pow_ui(modulus.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(cfg.strength) * static_cast<unsigned long>(r));
    const std::int64_t required = static_cast<std::int64_t>(cfg.strength) * r;
    for (const auto& m : bases) {
      if (m.is_zero()) continue;
      const std::int64_t dm = s.degree(m);
      if (dm > m_budget) continue;
      std::int64_t dtop = 0;
      if (__builtin_mul_overflow(dm, upper, &dtop) || dtop > s.safe_bound()) continue;
      const Rational a = s.coefficient(m.scaled(upper));
      const Rational b = s.coefficient(m.scaled(lower));
      if (a == 0 && b == 0) continue;
      ++rep.checked_count;
      const bool a_int = !mpz_divisible_p(a.get_den_mpz_t(), P.get_mpz_t());
      const bool b_int = !mpz_divisible_p(b.get_den_mpz_t(), P.get_mpz_t());
      if (!a_int || !b_int) {
        if (!rep.witness) {
          rep.witness = GaussWitness{m, r, std::min(p_adic_valuation(a, prime), p_adic_valuation(b, prime)), 0,
                                     "non-integral"};
        }
        continue;
      }
      const Rational diff = a - b;
      if (mpz_divisible_p(diff.get_num_mpz_t(), modulus.get_mpz_t())) continue;
      if (!rep.witness) rep.witness = GaussWitness{m, r, valuation(diff.get_num(), P), required, "valuation"};
    }
    lower = upper;
  }
  if (rep.witness) {
    rep.verdict = Verdict::kFails;
  } else if (rep.checked_count == 0) {
    rep.verdict = Verdict::kInsufficientTruncation;
  } else {
    rep.verdict = Verdict::kHolds;
  }
  return rep;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kExcluded: return "excluded";
    case Verdict::kInsufficientTruncation: return "insufficient-truncation";
  }
  return "unknown";
}

std::int64_t p_adic_valuation(const Rational& a, std::uint64_t p) {
  require_prime(p);
  if (a == 0) return kInfiniteValuation;
  const Integer P(static_cast<unsigned long>(p));
  return valuation(a.get_num(), P) - valuation(a.get_den(), P);
}

std::vector<std::uint64_t> excluded_primes(const RationalFunction& f, const ExponentVector& v) {
  const Rational q_v = f.denominator().coefficient(v);
  if (q_v == 0) throw Error(ErrorCode::kNotVertex, v.to_string() + " is not in the support of Q");
  std::set<std::uint64_t> out;
  auto add = [&](const Integer& z) {
    for (const auto& p : distinct_prime_factors(z)) {
      if (!p.fits_ulong_p()) throw Error(ErrorCode::kOverflow, "excluded prime exceeds 64 bits");
      out.insert(p.get_ui());
    }
  };
  add(q_v.get_num());
  if (!f.numerator().is_zero()) add(f.numerator().numerator_gcd());
  return {out.begin(), out.end()};
}

bool GaussReport::all_hold() const {
  return std::all_of(primes.begin(), primes.end(),
                     [](const PrimeReport& r) { return r.verdict == Verdict::kHolds || r.verdict == Verdict::kExcluded; });
}

bool GaussReport::any_fails() const {
  return std::any_of(primes.begin(), primes.end(), [](const PrimeReport& r) { return r.verdict == Verdict::kFails; });
}

bool GaussReport::any_insufficient() const {
  return std::any_of(primes.begin(), primes.end(),
                     [](const PrimeReport& r) { return r.verdict == Verdict::kInsufficientTruncation; });
}

const PrimeReport* GaussReport::find(std::uint64_t p) const {
  for (const auto& r : primes) {
    if (r.prime == p) return &r;
  }
  return nullptr;
}

GaussReport check_gauss(const TruncatedLaurentSeries& s, const std::vector<std::uint64_t>& excluded,
                        const GaussCheckConfig& cfg) {
  if (cfg.r_max < 1) throw Error(ErrorCode::kInvalidArgument, "r_max must be at least 1");
  if (cfg.strength < 1) throw Error(ErrorCode::kInvalidArgument, "strength must be at least 1");
  if (cfg.primes.empty()) throw Error(ErrorCode::kInvalidArgument, "no primes to check");
  std::set<std::uint64_t> distinct;
  for (auto p : cfg.primes) {
    require_prime(p);
    if (!distinct.insert(p).second) throw Error(ErrorCode::kInvalidArgument, "prime " + std::to_string(p) + " listed twice");
  }
  GaussReport report;
  report.strength = cfg.strength;
  report.r_max = cfg.r_max;
  report.bound = s.safe_bound();
  const auto pmin = static_cast<std::int64_t>(*distinct.begin());
  report.m_budget = cfg.m_budget ? *cfg.m_budget : s.safe_bound() / (pmin * pmin);

  const std::vector<ExponentVector> support = s.sorted_support();
  report.primes.resize(cfg.primes.size());
  auto run = [&](std::size_t i) {
    const std::uint64_t p = cfg.primes[i];
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) {
      report.primes[i].prime = p;
      report.primes[i].verdict = Verdict::kExcluded;
    } else {
      report.primes[i] = check_prime(s, p, cfg, report.m_budget, support);
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1U, cfg.jobs), cfg.primes.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cfg.primes.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cfg.primes.size(); i = next++) run(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return report;
}

GaussReport check_gauss(const RationalFunction& f, const ExponentVector& v, const GaussCheckConfig& cfg,
                        std::int64_t bound) {
  const TruncatedLaurentSeries s = expand_at_vertex(f, v, bound);
  return check_gauss(s, excluded_primes(f, v), cfg);
}

bool check_integer_power_congruence(const Integer& a, std::uint64_t p, int r_max, int m_max) {
  require_prime(p);
  const Integer P(static_cast<unsigned long>(p));
  for (int r = 1; r <= r_max; ++r) {
    Integer mod, lower, upper;
    mpz_pow_ui(mod.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(r));
    mpz_pow_ui(lower.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(r - 1));
    upper = lower * P;
    for (int m = 1; m <= m_max; ++m) {
      Integer x, y;
      const Integer eu = upper * m;
      const Integer el = lower * m;
      mpz_powm(x.get_mpz_t(), a.get_mpz_t(), eu.get_mpz_t(), mod.get_mpz_t());
      mpz_powm(y.get_mpz_t(), a.get_mpz_t(), el.get_mpz_t(), mod.get_mpz_t());
      if (x != y) return false;
    }
  }
  return true;
}

}  // namespace gausscong
