// Factorization over Q by the big-prime variant of Zassenhaus: pick a prime p
// above twice the Mignotte-style coefficient bound, factor modulo p with
// distinct-degree plus Cantor-Zassenhaus splitting, then recombine modular
// factors by trial division over Z.

#include <algorithm>
#include <optional>
#include <random>

#include "gausscong/error.hpp"
#include "gausscong/univariate.hpp"

namespace gausscong {

namespace {

using ZPoly = std::vector<Integer>;  // low degree first, trimmed

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

/// Arithmetic in (Z/pZ)[x] with coefficients kept in [0, p).
class ModP {
 public:
  explicit ModP(Integer p) : p_(std::move(p)) {}

  const Integer& prime() const { return p_; }

  Integer reduce(const Integer& a) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  ZPoly reduce(const ZPoly& a) const {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i]);
    trim(r);
    return r;
  }

  Integer inverse(const Integer& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-invertible residue");
    }
    return r;
  }

  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      Integer x = i < a.size() ? a[i] : Integer(0);
      if (i < b.size()) x -= b[i];
      r[i] = reduce(x);
    }
    trim(r);
    return r;
  }

  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = reduce(c);
    trim(r);
    return r;
  }

  std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) const {
    if (deg(a) < deg(b)) return {{}, a};
    ZPoly rem = a;
    ZPoly quo(a.size() - b.size() + 1);
    const Integer inv = inverse(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      const Integer q = reduce(rem[i] * inv);
      quo[i - db] = q;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = reduce(rem[i - db + j] - q * b[j]);
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
  }

  ZPoly rem(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }

  ZPoly monic(const ZPoly& a) const {
    if (a.empty()) return a;
    const Integer inv = inverse(a.back());
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i] * inv);
    return r;
  }

  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  ZPoly powmod(ZPoly base, Integer e, const ZPoly& modulus) const {
    ZPoly result{Integer(1)};
    base = rem(base, modulus);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), modulus);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), modulus);
    }
    return result;
  }

  ZPoly derivative(const ZPoly& a) const {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = reduce(a[i] * static_cast<long>(i));
    trim(r);
    return r;
  }

 private:
  Integer p_;
};

ZPoly to_zpoly(const UPoly& u) {
  ZPoly r;
  for (const auto& c : u.coefficients()) r.push_back(c.get_num());
  return r;
}

UPoly from_zpoly(const ZPoly& z) {
  std::vector<Rational> v;
  for (const auto& c : z) v.emplace_back(c);
  return UPoly(std::move(v));
}

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ZPoly, int>> distinct_degree(const ModP& F, ZPoly f) {
  std::vector<std::pair<ZPoly, int>> out;
  const ZPoly x{Integer(0), Integer(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = F.powmod(h, F.prime(), f);
    ZPoly g = F.gcd(F.sub(h, x), f);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const ModP& F, const ZPoly& g, int d, std::mt19937_64& rng, std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), F.prime().get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) {
      Integer r = Integer(static_cast<unsigned long>(rng() >> 1));
      r <<= 62;
      r += Integer(static_cast<unsigned long>(rng() >> 2));
      c = F.reduce(r);
    }
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly b = F.powmod(a, e, g);
    b = F.sub(b, ZPoly{Integer(1)});
    ZPoly c = F.gcd(b, g);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      equal_degree(F, c, d, rng, out);
      equal_degree(F, F.divmod(g, c).first, d, rng, out);
      return;
    }
  }
}

Integer coefficient_bound(const ZPoly& g) {
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer b = root << static_cast<unsigned long>(deg(g));
  return b * abs(g.back());
}

ZPoly symmetric(const ModP& F, const ZPoly& a) {
  const Integer half = F.prime() / 2;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = F.reduce(a[i]);
    if (r[i] > half) r[i] -= F.prime();
  }
  trim(r);
  return r;
}

/// Exact quotient a / b over Z, or nullopt if b does not divide a.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly rem = a;
  ZPoly quo(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const Integer q = rem[i] / b.back();
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(quo);
  return quo;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Irreducible factors of a primitive squarefree polynomial with g(0) != 0 and deg >= 2.
std::vector<ZPoly> factor_squarefree(const ZPoly& g) {
  const ZPoly gp = [&] {
    ZPoly d(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i) d[i - 1] = g[i] * static_cast<long>(i);
    return d;
  }();
  Integer p = 2 * coefficient_bound(g) + 1;
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  for (;;) {
    ModP F(p);
    if (F.reduce(g.back()) != 0 && deg(F.gcd(F.reduce(g), F.reduce(gp))) == 0) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  const ModP F(p);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<ZPoly> modular;
  for (const auto& [block, d] : distinct_degree(F, F.monic(F.reduce(g)))) {
    equal_degree(F, block, d, rng, modular);
  }

  std::vector<ZPoly> found;
  ZPoly rest = g;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    bool progressed = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly prod{F.reduce(rest.back())};
      for (auto i : idx) prod = F.mul(prod, modular[i]);
      ZPoly cand = primitive_part(symmetric(F, prod));
      if (auto q = exact_divide(rest, cand)) {
        found.push_back(cand);
        rest = primitive_part(*q);
        for (std::size_t k = s; k-- > 0;) modular.erase(modular.begin() + static_cast<long>(idx[k]));
        progressed = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progressed) ++s;
  }
  if (deg(rest) > 0) found.push_back(primitive_part(rest));
  return found;
}

bool factor_less(const UnivariateFactor& a, const UnivariateFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

UnivariateFactorization factor_univariate(const UPoly& u) {
  if (u.is_zero()) throw Error(ErrorCode::kZeroInput, "cannot factor the zero polynomial");
  UnivariateFactorization out;
  for (const auto& [part, mult] : squarefree_decomposition(u)) {
    UPoly sq = part.primitive();
    if (sq.constant_term() == 0) {
      out.factors.push_back({UPoly{Rational(0), Rational(1)}, mult});
      sq = divmod(sq, UPoly{Rational(0), Rational(1)}).first;
    }
    if (sq.degree() == 1) {
      out.factors.push_back({sq, mult});
    } else if (sq.degree() >= 2) {
      for (const auto& f : factor_squarefree(to_zpoly(sq))) out.factors.push_back({from_zpoly(f), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  UnivariateFactorization monic_product{Rational(1), out.factors};
  out.unit = u.leading() / monic_product.expand().leading();
  return out;
}

}  // namespace gausscong
