// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "gausscong/error.hpp"
#include "gausscong/gauss.hpp"
#include "gausscong/theory.hpp"
#include "support.hpp"

using namespace gausscong;
using gctest::poly;
using gctest::rf;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: ";
      if (pass) detail << what << "; ";
      pass = false;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

ExponentVector zeros(std::size_t n) { return ExponentVector(n); }

LinearForm ones(std::size_t n) { return LinearForm(n, 1); }

GaussCheckConfig config(std::vector<std::uint64_t> primes, int r_max, int strength = 1) {
  GaussCheckConfig c;
  c.primes = std::move(primes);
  c.r_max = r_max;
  c.strength = strength;
  return c;
}

/// No prime fails and every listed prime checked something.
bool holds_everywhere(const GaussReport& r, std::ostringstream& detail) {
  for (const auto& p : r.primes) {
    detail << "p=" << p.prime << ":" << verdict_name(p.verdict) << "(" << p.checked_count << ") ";
    if (p.verdict == Verdict::kFails || p.checked_count == 0) return false;
  }
  return true;
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// sum_k C(n,k)^2 C(n+k,k)^2
Integer apery_number(long n) {
  Integer s = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer a = binomial(n, k) * binomial(n + k, k);
    s += a * a;
  }
  return s;
}

const RationalFunction& apery() {
  static const RationalFunction f = rf("1", "(1-x1-x2)*(1-x3-x4)-x1*x2*x3*x4", 4);
  return f;
}

const TruncatedLaurentSeries& apery_series() {
  static const TruncatedLaurentSeries s = expand_at_vertex(apery(), zeros(4), 40, ones(4));
  return s;
}

void apery_gauss(Outcome& o) {
  const auto& s = apery_series();
  const auto report = check_gauss(s, excluded_primes(apery(), zeros(4)), config({2, 3, 5, 7}, 2));
  o.require(holds_everywhere(report, o.detail), "congruence failure or nothing checked");
  o.detail << "coefficients " << s.coefficients().size();
}

void apery_supercongruence(Outcome& o) {
  const auto& s = apery_series();
  GaussCheckConfig cfg = config({5, 7}, 1, 3);
  cfg.m_budget = 5;
  const auto report = check_gauss(s, excluded_primes(apery(), zeros(4)), cfg);
  o.require(holds_everywhere(report, o.detail), "mod p^3 failure");
  for (long n = 0; n <= 10; ++n) {
    const Rational c = s.coefficient(ExponentVector{n, n, n, n});
    o.require(c == Rational(apery_number(n)), "diagonal differs from the binomial sum at n=" + std::to_string(n));
  }
  o.require(s.coefficient(ExponentVector{0, 0, 0, 0}) == 1, "A0 != 1");
  o.require(s.coefficient(ExponentVector{1, 1, 1, 1}) == 5, "A1 != 5");
  o.detail << "diagonal n<=10 matches, A0=1 A1=5";
}

void delannoy(Outcome& o) {
  const auto q = poly("1-x-y-x*y", 2);
  for (const char* num : {"1", "x", "y", "x*y"}) {
    const RationalFunction f(poly(num, 2), q);
    const auto report = check_gauss(f, zeros(2), config({2, 3, 5, 7}, 2), 60);
    std::ostringstream ignored;
    o.require(holds_everywhere(report, ignored), std::string("check fails for numerator ") + num);
    o.require(classify_linear(poly(num, 2), q), std::string("classify_linear false for ") + num);
  }
  o.require(!classify_linear(poly("x^2", 2), q), "classify_linear true for x^2");
  o.detail << "numerators 1,x,y,xy hold and classify true; x^2 classifies false";
}

void minton_sweep(Outcome& o) {
  std::unordered_set<std::string> seen;
  long instances = 0, distinct = 0, yes = 0, no = 0, disagreements = 0, bad_recombination = 0;
  std::string first_disagreement;
  std::vector<Rational> pc(4), qc(4);
  for (int pi = 0; pi < 625; ++pi) {
    for (int i = 0, c = pi; i < 4; ++i, c /= 5) pc[static_cast<std::size_t>(i)] = Rational(c % 5 - 2);
    const UPoly p(pc);
    if (p.is_zero()) continue;
    for (int qi = 0; qi < 625; ++qi) {
      for (int i = 0, c = qi; i < 4; ++i, c /= 5) qc[static_cast<std::size_t>(i)] = Rational(c % 5 - 2);
      if (qc[0] == 0) continue;
      ++instances;
      const RationalFunction f(p.to_laurent(), UPoly(qc).to_laurent());
      if (!seen.insert(f.to_string()).second) continue;
      ++distinct;
      const auto verdict = minton_decide(f);
      const bool brute = gctest::brute_force_verdict(f, 37, 150);
      if (verdict.has_gauss) {
        ++yes;
        if (!equivalent(verdict.decomposition->recombine(), f)) ++bad_recombination;
      } else {
        ++no;
      }
      if (verdict.has_gauss != brute) {
        if (disagreements == 0) first_disagreement = f.to_string();
        ++disagreements;
      }
    }
  }
  o.require(disagreements == 0, "verdict disagrees with brute force on " + first_disagreement);
  o.require(bad_recombination == 0, "decomposition does not recombine");
  o.detail << instances << " instances, " << distinct << " distinct, " << yes << " yes, " << no << " no, "
           << disagreements << " disagreements";
}

void negative_control(Outcome& o) {
  const RationalFunction f = rf("x-2", "x+x^2", 1);
  const auto verdict = minton_decide(f);
  o.require(!verdict.has_gauss, "minton says yes");
  const auto report = check_gauss(f, canonical_vertex(f.denominator()), config({5, 7}, 2), 60);
  for (const auto& p : report.primes) {
    o.require(p.verdict == Verdict::kFails && p.witness.has_value(), "no witness at p=" + std::to_string(p.prime));
    if (p.witness) o.detail << "p=" << p.prime << " witness m=" << p.witness->m.to_string() << " r=" << p.witness->r << " ";
  }
  o.detail << "minton: " << minton_reason_name(verdict.reason);
}

void gessel(Outcome& o) {
  const auto q = poly("(1-3*x)*(1-y-3*x+3*x^2)", 2);
  const auto verdict = classify_mostly_linear(poly("1", 2), q, 0);
  o.require(verdict.overall, "mostly-linear classification says no");
  const RationalFunction f(poly("1", 2), q);
  const auto s = expand_at_vertex(f, zeros(2), 40, ones(2));
  const auto report = check_gauss(s, excluded_primes(f, zeros(2)), config({2, 5, 7}, 2));
  o.require(holds_everywhere(report, o.detail), "congruence failure");
  Integer nine = 1;
  for (long n = 0; n <= 10; ++n, nine *= 9) {
    o.require(s.coefficient(ExponentVector{n, n}) == Rational(nine), "diagonal != 9^n at n=" + std::to_string(n));
  }
  o.detail << "diagonal = 9^n for n<=10";
}

void determinants(Outcome& o) {
  std::mt19937_64 rng(20240607);
  int done = 0, failures = 0;
  std::uint64_t checked = 0;
  while (done < 50) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % n;
    std::vector<RationalFunction> fs;
    for (std::size_t j = 0; j < m; ++j) {
      LaurentPolynomial p(n);
      while (p.size() < 2) p = gctest::random_laurent(rng, n, 3, 1, 3);
      fs.emplace_back(p);
    }
    const auto f = log_det_construct(fs, n);
    if (f.is_zero()) continue;
    const LaurentPolynomial dens[] = {f.denominator()};
    const LinearForm w = generic_form(dens);
    ExponentVector v = f.denominator().terms().begin()->first;
    for (const auto& [k, c] : f.denominator().terms()) {
      if (apply_form(w, k) < apply_form(w, v)) v = k;
    }
    const std::int64_t bound = n == 1 ? 60 : (n == 2 ? 24 : 12);
    const auto report = check_gauss(f, v, config({2, 3, 5, 7, 11, 13}, 2), bound);
    for (const auto& p : report.primes) {
      checked += p.checked_count;
      if (p.verdict == Verdict::kFails) {
        if (failures == 0) o.detail << "failure at p=" << p.prime << " for " << f.to_string() << "; ";
        ++failures;
      }
    }
    ++done;
  }
  o.require(failures == 0, "congruence failures");
  o.require(checked > 0, "nothing checked");
  o.detail << done << " instances, " << checked << " pairs checked, " << failures << " failures";
}

void toroidal_lucas(Outcome& o) {
  const RationalFunction lucas = rf("2-x", "1-x-x^2", 1);
  ToroidalMap map;
  map.a = {{Rational(1)}, {Rational(1)}};
  const RationalFunction image = toroidal_substitute(lucas, map);
  o.require(equivalent(image, rf("2-x*y", "1-x*y-x^2*y^2", 2)), "image is not (2-xy)/(1-xy-x^2y^2)");
  const auto univariate = expand_at_vertex(lucas, zeros(1), 60);
  const auto bivariate = expand_at_vertex(image, zeros(2), 60);
  const auto cfg = config({2, 3, 5, 7}, 2);
  const auto r1 = check_gauss(univariate, excluded_primes(lucas, zeros(1)), cfg);
  const auto r2 = check_gauss(bivariate, excluded_primes(image, zeros(2)), cfg);
  for (std::size_t i = 0; i < r1.primes.size(); ++i) {
    o.require(r1.primes[i].verdict == r2.primes[i].verdict, "verdicts differ at p=" + std::to_string(r1.primes[i].prime));
    o.detail << "p=" << r1.primes[i].prime << ":" << verdict_name(r1.primes[i].verdict) << "/"
             << verdict_name(r2.primes[i].verdict) << " ";
  }
  o.require(univariate.coefficient(ExponentVector{0}) == 2 && univariate.coefficient(ExponentVector{1}) == 1,
            "L0, L1 wrong in one variable");
  o.require(bivariate.coefficient(ExponentVector{0, 0}) == 2 && bivariate.coefficient(ExponentVector{1, 1}) == 1,
            "L0, L1 wrong in two variables");
  o.detail << "L0=2 L1=1";
}

void product_factorizations(Outcome& o) {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 20) {
    const std::size_t n = 1 + rng() % 2;
    LaurentPolynomial p = gctest::random_laurent(rng, n, 3, 2, 3, true);
    LaurentPolynomial q = gctest::random_laurent(rng, n, 3, 2, 3, true);
    p.add_term(zeros(n), Rational(1) - p.coefficient(zeros(n)));
    q.add_term(zeros(n), Rational(1) - q.coefficient(zeros(n)));
    const auto s = expand_at_vertex(RationalFunction(p, q), zeros(n), 12, ones(n));
    const auto back = expand_product(product_factorization(s), s);
    bool same = back.coefficients().size() == s.coefficients().size();
    for (const auto& [k, c] : s.coefficients()) same = same && back.coefficient(k) == c;
    o.require(same, "round trip differs for (" + p.to_string() + ")/(" + q.to_string() + ")");
    ++done;
  }
  const auto geometric = expand_at_vertex(rf("1", "1-x", 1), zeros(1), 12);
  const auto pf = product_factorization(geometric);
  std::vector<std::int64_t> support;
  for (const auto& e : pf.entries) {
    o.require(e.a == -1, "a_k != -1 at k=" + e.exponent.to_string());
    support.push_back(e.exponent[0]);
  }
  o.require(support == std::vector<std::int64_t>{1, 2, 4, 8}, "support of a_k is not {1,2,4,8}");
  o.detail << done << " round trips; 1/(1-x): a_k = -1 exactly at k = 1,2,4,8";
}

void integer_powers(Outcome& o) {
  int cases = 0;
  for (long a = -20; a <= 20; ++a) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      ++cases;
      o.require(check_integer_power_congruence(Integer(a), p, 3, 4),
                "a=" + std::to_string(a) + " p=" + std::to_string(p));
    }
  }
  o.detail << cases << " (a, p) pairs with r<=3, m<=4";
}

void vertex_independence(Outcome& o) {
  const RationalFunction f = rf("1+2*x-x^2", "1-x^2", 1);
  const auto cfg = config({3, 5, 7}, 2);
  const auto at0 = check_gauss(f, ExponentVector{0}, cfg, 60);
  const auto at2 = check_gauss(f, ExponentVector{2}, cfg, 60);
  for (std::size_t i = 0; i < at0.primes.size(); ++i) {
    o.require(at0.primes[i].verdict == at2.primes[i].verdict, "verdicts differ at p=" + std::to_string(at0.primes[i].prime));
    o.detail << "p=" << at0.primes[i].prime << ":" << verdict_name(at0.primes[i].verdict) << "/"
             << verdict_name(at2.primes[i].verdict) << " ";
  }
}

struct Triangle {
  const char* q;
  std::vector<std::string> special;  // edges whose quadratic has two distinct rational roots
};

/// Primes outside {a d f, nonzero edge discriminants} up to 13.
std::vector<std::uint64_t> regular_primes(const LaurentPolynomial& q) {
  auto c = [&](std::int64_t i, std::int64_t j) { return q.coefficient(ExponentVector{i, j}); };
  const Rational a = c(0, 0), b = c(1, 0), cy = c(0, 1), d = c(2, 0), e = c(1, 1), f = c(0, 2);
  std::set<std::uint64_t> bad;
  const Rational values[] = {a, d, f, b * b - 4 * a * d, cy * cy - 4 * a * f, e * e - 4 * d * f};
  for (const Rational& z : values) {
    if (z == 0) continue;
    for (const auto& p : distinct_prime_factors(Integer(z.get_num()))) bad.insert(p.get_ui());
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    if (!bad.count(p)) out.push_back(p);
  }
  return out;
}

bool empirical_gauss(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  GaussCheckConfig cfg = config(regular_primes(q), 2);
  cfg.m_budget = 6;
  return !check_gauss(RationalFunction(p, q), zeros(2), cfg, 40).any_fails();
}

void degree2(Outcome& o) {
  const std::vector<Triangle> triangles = {
      {"1+3*x+3*y+2*x^2+5*x*y+2*y^2", {"x", "y", "x*y"}},  // (1+x)(1+2x), (1+y)(1+2y), (2x+y)(x+2y)
      {"1+x^2+y^2+3*x*y", {}},
      {"1+3*x+y+2*x^2+x*y+y^2", {"x"}},
      {"1+x+3*y+x^2+3*x*y+2*y^2", {"y", "x*y"}},         // (1+y)(1+2y), (x+y)(x+2y)
      {"1+5*x+5*y+6*x^2+x*y+6*y^2", {"x", "y"}},          // (1+2x)(1+3x), (1+2y)(1+3y)
      {"1-3*x+y+2*x^2+5*x*y+2*y^2", {"x", "x*y"}},        // (1-x)(1-2x), (2x+y)(x+2y)
      {"2+3*x+y+x^2+y^2", {"x"}},                         // (1+x)(2+x)
      {"1+2*x+2*y+x^2+2*x*y-3*y^2", {"y", "x*y"}},        // x edge (1+x)^2 is a double root
      {"1+x+y-x^2+3*x*y-y^2", {}},
      {"1+4*x+3*y+3*x^2+x*y+2*y^2", {"x", "y"}},          // (1+x)(1+3x), (1+y)(1+2y)
  };
  int membership_checks = 0, gauss_yes = 0;
  std::mt19937_64 rng(12);
  for (const auto& t : triangles) {
    const auto q = poly(t.q, 2);
    const auto c = classify_degree2(q, q);
    o.require(c.route == "triangle", std::string("route ") + c.route + " for " + t.q);
    o.require(c.dim == static_cast<int>(3 + t.special.size()), std::string("dim mismatch for ") + t.q);
    o.require(c.special_monomials == t.special, std::string("special monomials mismatch for ") + t.q);

    std::vector<LaurentPolynomial> numerators = {q, q.euler(0), q.euler(1)};
    for (const auto& m : t.special) numerators.push_back(poly(m, 2));
    // a random member of the span
    LaurentPolynomial combo(2);
    for (const auto& b : numerators) combo = combo + b * Rational(gctest::uniform(rng, -3, 3));
    if (!combo.is_zero()) numerators.push_back(combo);
    // outside the span: the non-special edge monomials and 1
    for (const char* m : {"x", "y", "x*y", "1"}) {
      if (std::find(t.special.begin(), t.special.end(), m) == t.special.end()) numerators.push_back(poly(m, 2));
    }
    for (const auto& p : numerators) {
      const bool certified = classify_degree2(p, q).has_gauss;
      const bool empirical = empirical_gauss(p, q);
      ++membership_checks;
      if (certified) ++gauss_yes;
      o.require(certified == empirical, "numerator " + p.to_string() + " over " + t.q + ": classify " +
                                            (certified ? "yes" : "no") + ", empirical " + (empirical ? "yes" : "no"));
    }
  }
  o.require(gauss_yes > 0 && gauss_yes < membership_checks, "membership verdicts are all equal");
  o.detail << triangles.size() << " triangles, " << membership_checks << " membership verdicts compared ("
           << gauss_yes << " yes, " << membership_checks - gauss_yes << " no)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"Apery Gauss congruences, bound 40, p in {2,3,5,7}", apery_gauss},
      {"Apery supercongruence s=3, p in {5,7}", apery_supercongruence},
      {"Delannoy numerators and linear classification", delannoy},
      {"Minton decision vs brute force sweep", minton_sweep},
      {"negative control (x-2)/(x+x^2)", negative_control},
      {"Gessel mostly-linear and 9^n diagonal", gessel},
      {"50 random determinant constructions", determinants},
      {"toroidal transport of the Lucas verdicts", toroidal_lucas},
      {"product factorization round trips", product_factorizations},
      {"integer power congruences", integer_powers},
      {"vertex independence for (1+2x-x^2)/(1-x^2)", vertex_independence},
      {"degree-2 triangles: dimension and membership", degree2},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s: %s [%.1fs] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
