#include "gausscong/ratfun.hpp"

#include <map>

#include "gausscong/error.hpp"
#include "gausscong/univariate.hpp"

namespace gausscong {

namespace {

void require_same_nvars(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::kVariableMismatch, "rational functions have different variable counts");
  }
}

}  // namespace

ExponentVector canonical_vertex(const LaurentPolynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::kZeroInput, "zero polynomial has no vertex");
  return q.terms().begin()->first;
}

RationalFunction::RationalFunction(const LaurentPolynomial& p)
    : RationalFunction(p, LaurentPolynomial::constant(p.nvars(), 1)) {}

RationalFunction::RationalFunction(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.nvars() != q.nvars()) throw Error(ErrorCode::kVariableMismatch, "numerator and denominator variable counts differ");
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "denominator is zero");
  LaurentPolynomial a = p;
  LaurentPolynomial b = q;
  if (a.is_zero()) {
    num_ = a;
    den_ = LaurentPolynomial::constant(q.nvars(), 1);
    return;
  }
  if (a.nvars() == 1) {
    const UnivariateLaurent ua = split_monomial(a);
    const UnivariateLaurent ub = split_monomial(b);
    const UPoly g = gcd(ua.poly, ub.poly);
    const UPoly pa = divmod(ua.poly, g).first;
    const UPoly pb = divmod(ub.poly, g).first;
    const std::int64_t shift = ua.shift - ub.shift;
    a = pa.to_laurent();
    b = pb.to_laurent();
    if (shift >= 0) {
      a = a.shifted(ExponentVector{shift});
    } else {
      b = b.shifted(ExponentVector{-shift});
    }
  }
  Rational scale = Rational(integer_lcm(a.denominator_lcm(), b.denominator_lcm()));
  {
    const Integer g = gcd((a * scale).numerator_gcd(), (b * scale).numerator_gcd());
    scale /= g;
  }
  if (b.terms().begin()->second < 0) scale = -scale;
  num_ = a * scale;
  den_ = b * scale;
}

RationalFunction normalize(const LaurentPolynomial& p, const LaurentPolynomial& q) { return {p, q}; }

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_nvars(a, b);
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_nvars(a, b);
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  require_same_nvars(a, b);
  if (b.is_zero()) throw Error(ErrorCode::kZeroDenominator, "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::derivative(std::size_t i) const {
  return {num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_};
}

RationalFunction RationalFunction::euler(std::size_t i) const {
  return {num_.euler(i) * den_ - num_ * den_.euler(i), den_ * den_};
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::kZeroDenominator, "denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPolynomial::constant(nvars(), 1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

RationalFunction compose(const RationalFunction& f, std::span<const RationalFunction> g) {
  const std::size_t n = f.nvars();
  if (g.size() != n) throw Error(ErrorCode::kVariableMismatch, "substitution needs one function per variable");
  const std::size_t m = g.front().nvars();
  for (const auto& gj : g) {
    if (gj.nvars() != m) throw Error(ErrorCode::kVariableMismatch, "substituted functions disagree on variable count");
    if (gj.is_zero()) throw Error(ErrorCode::kZeroInput, "substituted function is zero");
  }
  const LaurentPolynomial& P = f.numerator();
  const LaurentPolynomial& Q = f.denominator();
  ExponentVector lo = Q.min_exponents();
  ExponentVector hi = Q.max_exponents();
  if (!P.is_zero()) {
    const ExponentVector plo = P.min_exponents();
    const ExponentVector phi = P.max_exponents();
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], plo[j]);
      hi[j] = std::max(hi[j], phi[j]);
    }
  }
  // x^k -> prod a_j^(k_j - lo_j) b_j^(hi_j - k_j), the common factor prod a^-lo b^hi cancels.
  std::vector<std::map<std::int64_t, LaurentPolynomial>> num_pow(n), den_pow(n);
  auto power = [](std::map<std::int64_t, LaurentPolynomial>& cache, const LaurentPolynomial& base, std::int64_t e) {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  auto substitute = [&](const LaurentPolynomial& poly) {
    LaurentPolynomial out(m);
    for (const auto& [k, c] : poly.terms()) {
      LaurentPolynomial t = LaurentPolynomial::constant(m, c);
      for (std::size_t j = 0; j < n; ++j) {
        t = t * power(num_pow[j], g[j].numerator(), k[j] - lo[j]);
        t = t * power(den_pow[j], g[j].denominator(), hi[j] - k[j]);
      }
      out += t;
    }
    return out;
  };
  const LaurentPolynomial new_den = substitute(Q);
  if (new_den.is_zero()) throw Error(ErrorCode::kUndefinedSubstitution, "denominator vanishes after substitution");
  return {substitute(P), new_den};
}

LaurentPolynomial embed(const LaurentPolynomial& p, std::size_t nvars, std::span<const std::size_t> map) {
  if (map.size() != p.nvars()) throw Error(ErrorCode::kVariableMismatch, "embedding map length");
  LaurentPolynomial out(nvars);
  for (const auto& [k, c] : p.terms()) {
    ExponentVector e(nvars);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] >= nvars) throw Error(ErrorCode::kInvalidArgument, "embedding target out of range");
      e[map[i]] += k[i];
    }
    out.add_term(e, c);
  }
  return out;
}

RationalFunction embed(const RationalFunction& f, std::size_t nvars, std::span<const std::size_t> map) {
  return {embed(f.numerator(), nvars, map), embed(f.denominator(), nvars, map)};
}

}  // namespace gausscong
