#include "gausscong/expr.hpp"

#include <cctype>

#include "gausscong/error.hpp"

namespace gausscong {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, static_cast<std::int64_t>(pos_)); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.offset = static_cast<std::int64_t>(at);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::kAdd, std::move(lhs), term(), at);
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::kSub, std::move(lhs), term(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::kMul, std::move(lhs), factor(), at);
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::kDiv, std::move(lhs), factor(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::kNeg;
      e.offset = static_cast<std::int64_t>(at);
      e.children.push_back(factor());
      return e;
    }
    Expr b = base();
    skip();
    const std::size_t caret = pos_;
    if (accept('^')) {
      Expr e;
      e.kind = Expr::Kind::kPow;
      e.offset = static_cast<std::int64_t>(caret);
      e.value = exponent();
      e.children.push_back(std::move(b));
      return e;
    }
    return b;
  }

  Integer exponent() {
    skip();
    Integer e;
    if (accept('(')) {
      e = signed_literal();
      if (!accept(')')) fail("expected ')' after exponent");
    } else {
      e = signed_literal();
    }
    skip();
    if (accept('^')) {
      const Integer tail = exponent();
      if (tail < 0 || !tail.fits_ulong_p()) fail("exponent tower needs a small nonnegative exponent");
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), e.get_mpz_t(), tail.get_ui());
      e = r;
    }
    return e;
  }

  Integer signed_literal() {
    skip();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be an integer literal");
    }
    Integer v = digits();
    return negative ? Integer(-v) : v;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Expr base() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::kInteger;
      e.offset = static_cast<std::int64_t>(at);
      e.value = digits();
      return e;
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string name(text_.substr(pos_, end - pos_));
      Expr e;
      e.kind = Expr::Kind::kVariable;
      e.offset = static_cast<std::int64_t>(at);
      if (name == "x") {
        e.variable = 0;
      } else if (name == "y") {
        e.variable = 1;
      } else if (name == "z") {
        e.variable = 2;
      } else if (name == "w") {
        e.variable = 3;
      } else if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '8') {
        e.variable = static_cast<std::size_t>(name[1] - '1');
      } else {
        fail("unknown variable '" + name + "'");
      }
      pos_ = end;
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::size_t expression_nvars(const Expr& e) {
  std::size_t n = e.kind == Expr::Kind::kVariable ? e.variable + 1 : 0;
  for (const auto& c : e.children) n = std::max(n, expression_nvars(c));
  return n;
}

RationalFunction evaluate(const Expr& e, std::size_t nvars) {
  switch (e.kind) {
    case Expr::Kind::kInteger:
      return RationalFunction(LaurentPolynomial::constant(nvars, Rational(e.value)));
    case Expr::Kind::kVariable:
      if (e.variable >= nvars) throw ParseError("variable x" + std::to_string(e.variable + 1) + " exceeds the variable count", e.offset);
      return RationalFunction(LaurentPolynomial::variable(nvars, e.variable));
    case Expr::Kind::kAdd:
      return evaluate(e.children[0], nvars) + evaluate(e.children[1], nvars);
    case Expr::Kind::kSub:
      return evaluate(e.children[0], nvars) - evaluate(e.children[1], nvars);
    case Expr::Kind::kMul:
      return evaluate(e.children[0], nvars) * evaluate(e.children[1], nvars);
    case Expr::Kind::kDiv: {
      const RationalFunction d = evaluate(e.children[1], nvars);
      if (d.is_zero()) throw ParseError("division by zero", e.offset);
      return evaluate(e.children[0], nvars) / d;
    }
    case Expr::Kind::kNeg:
      return -evaluate(e.children[0], nvars);
    case Expr::Kind::kPow: {
      RationalFunction b = evaluate(e.children[0], nvars);
      if (!e.value.fits_slong_p() || abs(e.value) > 100000) throw ParseError("exponent too large", e.offset);
      long k = e.value.get_si();
      if (k < 0) {
        if (b.is_zero()) throw ParseError("division by zero", e.offset);
        b = RationalFunction(LaurentPolynomial::constant(nvars, 1)) / b;
        k = -k;
      }
      const auto ku = static_cast<unsigned>(k);
      return RationalFunction(b.numerator().pow(ku), b.denominator().pow(ku));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "bad expression node");
}

RationalFunction parse_rational_function(std::string_view text, std::size_t nvars) {
  return evaluate(parse_expression(text), nvars);
}

LaurentPolynomial as_laurent(const RationalFunction& f) {
  const LaurentPolynomial& d = f.denominator();
  if (d.size() != 1) throw Error(ErrorCode::kInvalidArgument, "expected a Laurent polynomial, got " + f.to_string());
  const auto& [k, c] = *d.terms().begin();
  return f.numerator().shifted(-k) * (Rational(1) / c);
}

LaurentPolynomial parse_laurent(std::string_view text, std::size_t nvars) {
  return as_laurent(parse_rational_function(text, nvars));
}

}  // namespace gausscong
