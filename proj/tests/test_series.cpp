#include <random>
#include <set>

#include "doctest.h"
#include "gausscong/error.hpp"
#include "gausscong/linalg.hpp"
#include "gausscong/series.hpp"
#include "support.hpp"

using namespace gausscong;
using gctest::poly;
using gctest::rf;

namespace {

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer delannoy(long m, long n) {
  Integer s = 0;
  for (long k = 0; k <= std::min(m, n); ++k) s += binom(m, k) * binom(n, k) * (Integer(1) << static_cast<unsigned>(k));
  return s;
}

Integer apery(long n) {
  Integer s = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer t = binom(n, k) * binom(n + k, k);
    s += t * t;
  }
  return s;
}

/// Checks (series * Q')_k = P'_k for every k of degree <= bound reachable from the data.
bool satisfies_defining_identity(const TruncatedLaurentSeries& s, const RationalFunction& f) {
  const ExponentVector& v = s.vertex();
  const LaurentPolynomial q = f.denominator().shifted(-v);
  const LaurentPolynomial p = f.numerator().shifted(-v);
  std::set<ExponentVector> ks;
  for (const auto& [k, c] : s.coefficients()) {
    for (const auto& [g, qc] : q.terms()) {
      if (s.knows(k + g)) ks.insert(k + g);
    }
  }
  for (const auto& [k, c] : p.terms()) {
    if (s.knows(k)) ks.insert(k);
  }
  for (const auto& k : ks) {
    Rational sum = 0;
    for (const auto& [g, qc] : q.terms()) sum += qc * s.coefficient(k - g);
    if (sum != p.coefficient(k)) return false;
  }
  return true;
}

/// Carathéodory: k is in the cone iff it is a nonnegative combination of some
/// linearly independent subset of the generators.
bool in_cone(const ExponentVector& k, const std::vector<ExponentVector>& gens) {
  if (k.is_zero()) return true;
  const std::size_t n = k.size();
  const std::size_t m = gens.size();
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1U << i)) idx.push_back(i);
    }
    if (idx.size() > n) continue;
    RationalMatrix a(n, std::vector<Rational>(idx.size()));
    std::vector<Rational> b(n);
    for (std::size_t r = 0; r < n; ++r) {
      b[r] = Rational(static_cast<long>(k[r]));
      for (std::size_t c = 0; c < idx.size(); ++c) a[r][c] = Rational(static_cast<long>(gens[idx[c]][r]));
    }
    if (rank(a, idx.size()) != idx.size()) continue;
    auto x = solve(a, b);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& t) { return t >= 0; })) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("expansion examples") {
  const auto s = expand_at_vertex(rf("1", "1-x-y", 2), ExponentVector{0, 0}, 10);
  CHECK(s.coefficient(ExponentVector{1, 1}) == 2);
  for (long a = 0; a <= 5; ++a) {
    for (long b = 0; b + a <= 10; ++b) CHECK(s.coefficient(ExponentVector{a, b}) == Rational(binom(a + b, a)));
  }

  const auto d = expand_at_vertex(rf("1", "1-x-y-x*y", 2), ExponentVector{0, 0}, 20);
  CHECK(d.coefficient(ExponentVector{1, 1}) == 3);
  for (long a = 0; a <= 10; ++a) {
    for (long b = 0; b <= 10; ++b) CHECK(d.coefficient(ExponentVector{a, b}) == Rational(delannoy(a, b)));
  }

  const auto ap = expand_at_vertex(rf("1", "(1-x1-x2)*(1-x3-x4)-x1*x2*x3*x4", 4), ExponentVector(4), 24);
  CHECK(ap.coefficient(ExponentVector{0, 0, 0, 0}) == 1);
  CHECK(ap.coefficient(ExponentVector{1, 1, 1, 1}) == 5);
  for (long n = 0; n <= 6; ++n) CHECK(ap.coefficient(ExponentVector{n, n, n, n}) == Rational(apery(n)));
}

TEST_CASE("truncation semantics") {
  const auto s = expand_at_vertex(rf("1", "1-x", 1), ExponentVector{0}, 5);
  CHECK(s.coefficient(ExponentVector{5}) == 1);
  CHECK(s.coefficient(ExponentVector{-3}) == 0);
  CHECK_THROWS_AS(s.coefficient(ExponentVector{6}), Error);
  try {
    s.coefficient(ExponentVector{6});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutOfTruncation);
  }
  CHECK(s.dump() == "0 : 1/1\n1 : 1/1\n2 : 1/1\n3 : 1/1\n4 : 1/1\n5 : 1/1\n");
  CHECK_THROWS_AS(expand_at_vertex(rf("1", "1-x-x^2", 1), ExponentVector{1}, 5), Error);
  CHECK_THROWS_AS(expand_at_vertex(rf("1", "1-x-y", 2), ExponentVector{0, 0}, 5, LinearForm{1, -1}), Error);
}

TEST_CASE("expansion at the other vertex") {
  // 1/(1-x) at x: -x^-1 - x^-2 - ...
  const auto s = expand_at_vertex(rf("1", "1-x", 1), ExponentVector{1}, 6);
  CHECK(s.grading() == LinearForm{-1});
  CHECK(s.coefficient(ExponentVector{-1}) == -1);
  CHECK(s.coefficient(ExponentVector{-4}) == -1);
  CHECK(s.coefficient(ExponentVector{0}) == 0);
  const auto f = rf("1+2*x-x^2", "1-x^2", 1);
  const auto t = expand_at_vertex(f, ExponentVector{2}, 10);
  CHECK(t.coefficient(ExponentVector{0}) == 1);
  CHECK(satisfies_defining_identity(t, f));
}

TEST_CASE("U_p examples") {
  const auto s = expand_at_vertex(rf("1", "1-x", 1), ExponentVector{0}, 30);
  const auto u = apply_up(s, 3);
  CHECK(u.bound() == 10);
  for (long k = 0; k <= 10; ++k) CHECK(u.coefficient(ExponentVector{k}) == 1);

  const auto e = expand_at_vertex(rf("1", "1-x^2", 1), ExponentVector{0}, 30);
  const auto u2 = apply_up(e, 2);
  const auto ref = expand_at_vertex(rf("1", "1-x", 1), ExponentVector{0}, 15);
  CHECK(u2.coefficients() == ref.coefficients());

  const auto d = expand_at_vertex(rf("1", "1-x-y-x*y", 2), ExponentVector{0, 0}, 30);
  CHECK(apply_up(d, 5).coefficient(ExponentVector{0, 0}) == d.coefficient(ExponentVector{0, 0}));
  CHECK_THROWS_AS(apply_up(d, 4), Error);
}

TEST_CASE("property: U_p U_q = U_pq and linearity") {
  const auto d = expand_at_vertex(rf("1-x", "1-x-y-x*y", 2), ExponentVector{0, 0}, 60);
  const auto a = apply_up(apply_up(d, 2), 3);
  const auto b = apply_up(apply_up(d, 3), 2);
  CHECK(a.coefficients() == b.coefficients());
  for (const auto& [k, c] : a.coefficients()) CHECK(d.coefficient(k.scaled(6)) == c);
  const auto f = rf("1", "1-x-y-x*y", 2);
  const auto g = rf("x", "1-x-y-x*y", 2);
  const auto sf = apply_up(expand_at_vertex(f, ExponentVector{0, 0}, 40), 3);
  const auto sg = apply_up(expand_at_vertex(g, ExponentVector{0, 0}, 40), 3);
  const auto ssum = apply_up(expand_at_vertex(f + g, ExponentVector{0, 0}, 40), 3);
  for (const auto& k : ssum.sorted_support()) CHECK(ssum.coefficient(k) == sf.coefficient(k) + sg.coefficient(k));
}

TEST_CASE("property: defining identity and cone support on random functions") {
  std::mt19937_64 rng(31);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto q = gctest::random_laurent(rng, n, 4, 2, 3);
    const auto p = gctest::random_laurent(rng, n, 3, 2, 3);
    if (q.is_zero() || q.size() < 2) continue;
    const RationalFunction f(p, q);
    const auto np = newton_polytope(f.denominator());
    for (const auto& v : np.vertices) {
      const auto s = expand_at_vertex(f, v, 8);
      CHECK(satisfies_defining_identity(s, f));
      const auto pp = f.numerator().shifted(-v);
      for (const auto& [k, c] : s.coefficients()) {
        bool ok = false;
        for (const auto& start : pp.support()) ok = ok || in_cone(k - start, s.cone_generators());
        CHECK(ok);
      }
    }
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("product factorization examples") {
  const auto one_minus_x = TruncatedLaurentSeries(1, ExponentVector{0}, LinearForm{1}, 10,
                                                  CoefficientMap{{ExponentVector{0}, 1}, {ExponentVector{1}, -1}});
  const auto pf = product_factorization(one_minus_x);
  REQUIRE(pf.entries.size() == 1);
  CHECK(pf.entries[0].exponent == ExponentVector{1});
  CHECK(pf.entries[0].a == 1);

  const auto geo = expand_at_vertex(rf("1", "1-x", 1), ExponentVector{0}, 40);
  const auto pg = product_factorization(geo);
  REQUIRE(pg.entries.size() == 6);
  for (std::size_t j = 0; j < pg.entries.size(); ++j) {
    CHECK(pg.entries[j].exponent == ExponentVector{std::int64_t{1} << j});
    CHECK(pg.entries[j].a == -1);
  }
  CHECK(expand_product(pg, geo).coefficients() == geo.coefficients());

  const auto constant = TruncatedLaurentSeries(2, ExponentVector{0, 0}, LinearForm{1, 1}, 10,
                                               CoefficientMap{{ExponentVector{0, 0}, 1}});
  CHECK(product_factorization(constant).entries.empty());
  const auto two = TruncatedLaurentSeries(1, ExponentVector{0}, LinearForm{1}, 5, CoefficientMap{{ExponentVector{0}, 2}});
  CHECK_THROWS_AS(product_factorization(two), Error);
}

TEST_CASE("property: factor then re-expand is the identity") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 2;
    const LinearForm alpha = n == 1 ? LinearForm{1} : LinearForm{1, 2};
    CoefficientMap c;
    c.emplace(ExponentVector(n), 1);
    for (int t = 0; t < 6; ++t) {
      ExponentVector k(n);
      for (std::size_t i = 0; i < n; ++i) k[i] = gctest::uniform(rng, 0, 4);
      if (k.is_zero() || apply_form(alpha, k) > 12) continue;
      Rational q(Integer(static_cast<long>(gctest::uniform(rng, -4, 4))), Integer(static_cast<long>(gctest::uniform(rng, 1, 3))));
      q.canonicalize();
      c[k] = q;
    }
    const TruncatedLaurentSeries s(n, ExponentVector(n), alpha, 12, c);
    CHECK(expand_product(product_factorization(s), s).coefficients() == s.coefficients());
  }
}
