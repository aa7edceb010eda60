#include "gausscong/laurent.hpp"

#include <algorithm>

#include "gausscong/error.hpp"

namespace gausscong {

namespace {

void require_same_nvars(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::kVariableMismatch,
                "variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                    std::to_string(b.nvars()));
  }
}

void require_nvars(const ExponentVector& k, std::size_t n) {
  if (k.size() != n) {
    throw Error(ErrorCode::kVariableMismatch, "exponent vector " + k.to_string() +
                                                   " does not have length " + std::to_string(n));
  }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0 || nvars > kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable count must be between 1 and " + std::to_string(kMaxVars));
  }
}

LaurentPolynomial::LaurentPolynomial(std::size_t nvars,
                                     std::initializer_list<std::pair<ExponentVector, Rational>> terms)
    : LaurentPolynomial(nvars) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, ExponentVector(nvars), c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t nvars, const ExponentVector& k,
                                              const Rational& c) {
  LaurentPolynomial p(nvars);
  p.add_term(k, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  return monomial(nvars, ExponentVector::unit(nvars, i));
}

Rational LaurentPolynomial::coefficient(const ExponentVector& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> LaurentPolynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [k, c] : terms_) s.push_back(k);
  return s;
}

bool LaurentPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

void LaurentPolynomial::add_term(const ExponentVector& k, const Rational& c) {
  require_nvars(k, nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same_nvars(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same_nvars(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same_nvars(a, b);
  LaurentPolynomial r(a.nvars_);
  Rational t;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      t = ca * cb;
      r.add_term(ka + kb, t);
    }
  }
  return r;
}

LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(nvars_, 1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& k) const {
  require_nvars(k, nvars_);
  LaurentPolynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  LaurentPolynomial r(nvars_);
  for (const auto& [k, c] : terms_) {
    if (k[i] == 0) continue;
    ExponentVector e = k;
    e[i] -= 1;
    r.terms_.emplace(e, c * Rational(Integer(static_cast<long>(k[i]))));
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::euler(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  LaurentPolynomial r(nvars_);
  for (const auto& [k, c] : terms_) {
    if (k[i] == 0) continue;
    r.terms_.emplace(k, c * Rational(Integer(static_cast<long>(k[i]))));
  }
  return r;
}

ExponentVector LaurentPolynomial::min_exponents() const {
  ExponentVector m(nvars_);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? k[i] : std::min(m[i], k[i]);
    first = false;
  }
  return m;
}

ExponentVector LaurentPolynomial::max_exponents() const {
  ExponentVector m(nvars_);
  bool first = true;
  for (const auto& [k, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? k[i] : std::max(m[i], k[i]);
    first = false;
  }
  return m;
}

Integer LaurentPolynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [k, c] : terms_) l = integer_lcm(l, c.get_den());
  return l;
}

Integer LaurentPolynomial::numerator_gcd() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) g = gcd(g, c.get_num());
  return g;
}

Rational LaurentPolynomial::content() const {
  if (is_zero()) return 0;
  Rational c(numerator_gcd(), denominator_lcm());
  c.canonicalize();
  return c;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::kVariableMismatch, "evaluation point length");
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (k[i] == 0) continue;
      if (point[i] == 0 && k[i] < 0) {
        throw Error(ErrorCode::kZeroDenominator, "negative power of a zero coordinate");
      }
      Rational base = k[i] > 0 ? point[i] : Rational(1) / point[i];
      const auto e = static_cast<unsigned long>(k[i] > 0 ? k[i] : -k[i]);
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), e);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k[i] != 1) mono += "^" + std::to_string(k[i]);
    }
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = to_short_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_short_string(mag) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace gausscong
