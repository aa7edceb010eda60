#include "gausscong/rational.hpp"

#include <cctype>

#include "gausscong/error.hpp"

namespace gausscong {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kVariableMismatch: return "variable-mismatch";
    case ErrorCode::kZeroDenominator: return "zero-denominator";
    case ErrorCode::kZeroInput: return "zero-input";
    case ErrorCode::kNotVertex: return "not-a-vertex";
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kOutOfTruncation: return "out-of-truncation";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kNotLinear: return "not-linear";
    case ErrorCode::kNonIntegralExponent: return "non-integral-exponent";
    case ErrorCode::kNotFace: return "not-a-face";
    case ErrorCode::kDegree: return "degree";
    case ErrorCode::kConstantTerm: return "constant-term";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kUndefinedSubstitution: return "undefined-substitution";
  }
  return "unknown";
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed rational '" + text + "'");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer integer_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::vector<Integer> distinct_prime_factors(Integer n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cannot factor zero");
  n = abs(n);
  std::vector<Integer> out;
  auto strip = [&](const Integer& p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  };
  strip(2);
  for (Integer p = 3; p * p <= n; p += 2) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) break;
    strip(p);
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace gausscong
