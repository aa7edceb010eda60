#include "gausscong/theory.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gausscong/error.hpp"

namespace gausscong {

namespace {

/// Laplace expansion along the first row, memoized on the set of used columns.
LaurentPolynomial poly_determinant(const std::vector<std::vector<LaurentPolynomial>>& m, std::size_t nvars) {
  const std::size_t size = m.size();
  if (size == 0) return LaurentPolynomial::constant(nvars, 1);
  std::unordered_map<std::uint32_t, LaurentPolynomial> memo;
  auto rec = [&](auto& self, std::size_t row, std::uint32_t used) -> LaurentPolynomial {
    if (row == size) return LaurentPolynomial::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    LaurentPolynomial acc(nvars);
    int sign = 1;
    for (std::size_t c = 0; c < size; ++c) {
      if (used & (1U << c)) continue;
      if (!m[row][c].is_zero()) {
        LaurentPolynomial term = m[row][c] * self(self, row + 1, used | (1U << c));
        if (sign < 0) term = -term;
        acc += term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

bool involves(const LaurentPolynomial& p, std::size_t var) {
  for (const auto& [k, c] : p.terms()) {
    if (k[var] != 0) return true;
  }
  return false;
}

bool linear_in(const LaurentPolynomial& p, std::size_t var) {
  for (const auto& [k, c] : p.terms()) {
    if (k[var] < 0 || k[var] > 1) return false;
  }
  return true;
}

LaurentPolynomial to_univariate(const UPoly& u) { return u.to_laurent(1, 0); }

RationalFunction univariate(const UPoly& p, const UPoly& q) { return RationalFunction(to_univariate(p), to_univariate(q)); }

void check_map(const ToroidalMap& map, std::size_t nvars) {
  if (map.rows() == 0 || map.rows() > kMaxVars) throw Error(ErrorCode::kInvalidArgument, "toroidal map needs 1..8 rows");
  for (const auto& row : map.a) {
    if (row.size() != nvars) throw Error(ErrorCode::kInvalidArgument, "toroidal map has the wrong number of columns");
  }
  if (rank(map.a, nvars) != nvars) throw Error(ErrorCode::kInvalidArgument, "toroidal map columns are dependent");
}

/// Divides both sides by the monomial x^(min exponents of Q), a unit of the Laurent ring.
RationalFunction cancel_monomial(const RationalFunction& f) {
  if (f.is_zero()) return f;
  const ExponentVector lo = -f.denominator().min_exponents();
  return RationalFunction(f.numerator().shifted(lo), f.denominator().shifted(lo));
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

}  // namespace

RationalFunction log_det_construct(std::span<const RationalFunction> fs, std::size_t nvars,
                                   std::span<const std::size_t> variables) {
  const std::size_t m = fs.size();
  std::vector<std::size_t> vars(variables.begin(), variables.end());
  if (vars.empty()) {
    for (std::size_t i = 0; i < m && i < nvars; ++i) vars.push_back(i);
  }
  if (m > vars.size() || m > nvars) throw Error(ErrorCode::kInvalidArgument, "more functions than variables");
  for (auto v : vars) {
    if (v >= nvars) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  }
  // Column j of det(theta_i f_j / f_j) has the common denominator P_j Q_j.
  std::vector<std::vector<LaurentPolynomial>> num(m, std::vector<LaurentPolynomial>(m, LaurentPolynomial(nvars)));
  LaurentPolynomial den = LaurentPolynomial::constant(nvars, 1);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& f = fs[j];
    if (f.nvars() != nvars) throw Error(ErrorCode::kVariableMismatch, "function has the wrong number of variables");
    if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "zero function in a logarithmic derivative");
    const auto& p = f.numerator();
    const auto& q = f.denominator();
    for (std::size_t i = 0; i < m; ++i) num[i][j] = q * p.euler(vars[i]) - p * q.euler(vars[i]);
    den = den * p * q;
  }
  return cancel_monomial(RationalFunction(poly_determinant(num, nvars), den));
}

RationalFunction qdet_construct(const LaurentPolynomial& q, std::span<const std::size_t> linear_vars,
                                const ExponentVector& k, std::span<const RationalFunction> fs,
                                std::span<const std::size_t> log_vars) {
  const std::size_t n = q.nvars();
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "Q is zero");
  if (k.size() != linear_vars.size()) throw Error(ErrorCode::kInvalidArgument, "k must have one entry per linear variable");
  for (std::size_t i = 0; i < linear_vars.size(); ++i) {
    const auto v = linear_vars[i];
    if (v >= n) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
    if (!linear_in(q, v)) throw Error(ErrorCode::kNotLinear, "Q is not linear in x" + std::to_string(v + 1));
    if (k[i] != 0 && k[i] != 1) throw Error(ErrorCode::kInvalidArgument, "k must lie in {0,1}^n");
  }
  if (fs.size() > log_vars.size()) throw Error(ErrorCode::kInvalidArgument, "more functions than log variables");
  for (const auto& f : fs) {
    if (f.nvars() != n) throw Error(ErrorCode::kVariableMismatch, "function has the wrong number of variables");
    for (auto v : linear_vars) {
      if (involves(f.numerator(), v) || involves(f.denominator(), v)) {
        throw Error(ErrorCode::kInvalidArgument, "f_j may not involve the linear variables");
      }
    }
  }
  const LaurentPolynomial qk = q.filtered([&](const ExponentVector& e) {
    for (std::size_t i = 0; i < linear_vars.size(); ++i) {
      if (e[linear_vars[i]] != k[i]) return false;
    }
    return true;
  });
  const RationalFunction lead(qk, q);
  if (fs.empty()) return lead;
  return cancel_monomial(lead * log_det_construct(fs, n, log_vars.first(fs.size())));
}

RationalFunction restrict_face(const RationalFunction& f, const Face& face) {
  const NewtonPolytope np = newton_polytope(f.denominator());
  if (face.form.size() != np.ambient_dim) throw Error(ErrorCode::kNotFace, "face form has the wrong dimension");
  const auto actual = supported_face(np, face.form, face.offset);
  if (!actual || (!face.members.empty() && actual->members != face.members)) {
    throw Error(ErrorCode::kNotFace, "not a face of N(Q): " + form_to_string(face.form) + " = " + std::to_string(face.offset));
  }
  auto on_face = [&](const ExponentVector& k) { return apply_form(face.form, k) == face.offset; };
  const LaurentPolynomial qf = f.denominator().filtered(on_face);
  const LaurentPolynomial pf =
      f.numerator().filtered([&](const ExponentVector& k) { return on_face(k) && polytope_contains_point(np, k); });
  return RationalFunction(pf, qf);
}

LaurentPolynomial toroidal_substitute(const LaurentPolynomial& p, const ToroidalMap& map) {
  check_map(map, p.nvars());
  LaurentPolynomial out(map.rows());
  for (const auto& [k, c] : p.terms()) {
    ExponentVector image(map.rows());
    for (std::size_t r = 0; r < map.rows(); ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < p.nvars(); ++i) s += map.a[r][i] * Rational(static_cast<long>(k[i]));
      if (s.get_den() != 1) {
        throw Error(ErrorCode::kNonIntegralExponent, "exponent " + k.to_string() + " has a non-integral image");
      }
      if (!s.get_num().fits_slong_p()) throw Error(ErrorCode::kOverflow, "image exponent overflows");
      image[r] = s.get_num().get_si();
    }
    out.add_term(image, c);
  }
  return out;
}

RationalFunction toroidal_substitute(const RationalFunction& f, const ToroidalMap& map) {
  return RationalFunction(toroidal_substitute(f.numerator(), map), toroidal_substitute(f.denominator(), map));
}

RationalFunction substitute_univariate(const RationalFunction& f, std::span<const RationalFunction> gs) {
  const std::size_t n = f.nvars();
  if (gs.size() != n) throw Error(ErrorCode::kInvalidArgument, "need one substitution per variable");
  std::vector<RationalFunction> embedded;
  RationalFunction factor(LaurentPolynomial::constant(n, 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (gs[j].nvars() != 1) throw Error(ErrorCode::kVariableMismatch, "substitutions must be univariate");
    if (gs[j].is_zero()) throw Error(ErrorCode::kZeroInput, "zero substitution");
    const std::size_t target[] = {j};
    embedded.push_back(embed(gs[j], n, target));
    factor = factor * (embedded.back().euler(j) / embedded.back());
  }
  return cancel_monomial(factor * compose(f, embedded));
}

RationalFunction substitute_multivariate(const RationalFunction& f, std::span<const RationalFunction> gs) {
  if (gs.size() != f.nvars()) throw Error(ErrorCode::kInvalidArgument, "need one substitution per variable");
  const std::size_t n = gs.front().nvars();
  for (const auto& g : gs) {
    if (g.nvars() != n) throw Error(ErrorCode::kVariableMismatch, "substitutions must share their variables");
    if (g.is_zero()) throw Error(ErrorCode::kZeroInput, "zero substitution");
  }
  return cancel_monomial(log_det_construct(gs, n) * compose(f, gs));
}

RationalFunction MintonDecomposition::recombine() const {
  RationalFunction acc(LaurentPolynomial::constant(1, constant));
  for (const auto& t : terms) {
    const UPoly xu = UPoly{Rational(0), Rational(1)} * t.u.derivative();
    acc = acc + RationalFunction(LaurentPolynomial::constant(1, t.c)) * univariate(xu, t.u);
  }
  return acc;
}

const char* minton_reason_name(MintonReason r) noexcept {
  switch (r) {
    case MintonReason::kNone: return "none";
    case MintonReason::kNewtonContainmentFails: return "newton-containment-fails";
    case MintonReason::kNonSimplePole: return "non-simple-pole";
    case MintonReason::kResidueNotLogDerivative: return "residue-not-log-derivative";
    case MintonReason::kIrrationalResidueMismatch: return "irrational-residue-mismatch";
  }
  return "unknown";
}

MintonVerdict minton_decide(const RationalFunction& f) {
  if (f.nvars() != 1) throw Error(ErrorCode::kVariableMismatch, "Minton's criterion needs one variable");
  if (f.is_zero()) throw Error(ErrorCode::kZeroInput, "zero rational function");
  auto fail = [](MintonReason r) {
    MintonVerdict v;
    v.reason = r;
    return v;
  };
  const UnivariateLaurent num = split_monomial(f.numerator());
  const UnivariateLaurent den = split_monomial(f.denominator());
  UPoly p = num.poly;
  UPoly q = den.poly;
  const UPoly g = gcd(p, q);
  if (g.degree() > 0) {
    p = divmod(p, g).first;
    q = divmod(q, g).first;
  }
  const std::int64_t shift = num.shift - den.shift;
  // With p(0), q(0) nonzero, N(x^shift p) in N(q) means no pole at 0 and no growth at infinity.
  if (shift < 0 || shift + p.degree() > q.degree()) return fail(MintonReason::kNewtonContainmentFails);
  const UPoly top = UPoly::monomial(static_cast<std::size_t>(shift)) * p;
  const Rational at_zero = shift == 0 ? p.constant_term() / q.constant_term() : Rational(0);
  const PartialFractions pf = partial_fractions(top - q * at_zero, q);

  MintonDecomposition dec;
  dec.constant = at_zero;
  for (const auto& t : pf.terms) {
    if (t.power > 1) return fail(MintonReason::kNonSimplePole);
  }
  const UPoly x{Rational(0), Rational(1)};
  for (const auto& t : pf.terms) {
    // t.numerator / t.factor = n / u with u(0) = 1.
    const Rational u0 = t.factor.constant_term();
    const UPoly u = t.factor * (Rational(1) / u0);
    const UPoly n = t.numerator * (Rational(1) / u0);
    const auto d = static_cast<long>(u.degree());
    // x u' = d u + rest with deg rest < d and rest(0) = -d.
    const UPoly rest = x * u.derivative() - u * Rational(d);
    const Rational c = n.constant_term() / rest.constant_term();
    if (!(n == rest * c)) {
      return fail(d >= 2 ? MintonReason::kIrrationalResidueMismatch : MintonReason::kResidueNotLogDerivative);
    }
    dec.terms.push_back({c, u});
  }
  if (!equivalent(dec.recombine(), f)) return fail(MintonReason::kResidueNotLogDerivative);
  MintonVerdict v;
  v.has_gauss = true;
  v.decomposition = std::move(dec);
  return v;
}

bool classify_linear(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.nvars() != q.nvars()) throw Error(ErrorCode::kVariableMismatch, "P and Q have different variable counts");
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "Q is zero");
  for (std::size_t i = 0; i < q.nvars(); ++i) {
    if (!linear_in(q, i)) throw Error(ErrorCode::kNotLinear, "Q is not linear in x" + std::to_string(i + 1));
  }
  if (p.is_zero()) return true;
  return polytope_contains(newton_polytope(p), newton_polytope(q));
}

const char* mostly_linear_kind_name(MostlyLinearKind k) noexcept {
  switch (k) {
    case MostlyLinearKind::kQZeroPNonzero: return "q_zero_p_nonzero";
    case MostlyLinearKind::kUnivariate: return "minton";
    case MostlyLinearKind::kVacuous: return "vacuous";
  }
  return "unknown";
}

MostlyLinearVerdict classify_mostly_linear(const LaurentPolynomial& p, const LaurentPolynomial& q, std::size_t z) {
  const std::size_t n = q.nvars();
  if (p.nvars() != n) throw Error(ErrorCode::kVariableMismatch, "P and Q have different variable counts");
  if (z >= n) throw Error(ErrorCode::kInvalidArgument, "distinguished variable out of range");
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "Q is zero");
  for (std::size_t i = 0; i < n; ++i) {
    if (i != z && !linear_in(q, i)) throw Error(ErrorCode::kNotLinear, "Q is not linear in x" + std::to_string(i + 1));
  }
  // Split a polynomial into coefficients p_k(z) of the linear-block monomials x^k.
  auto split = [&](const LaurentPolynomial& f) {
    std::map<ExponentVector, LaurentPolynomial> out;
    for (const auto& [e, c] : f.terms()) {
      ExponentVector key(n - 1);
      for (std::size_t i = 0, j = 0; i < n; ++i) {
        if (i != z) key[j++] = e[i];
      }
      auto it = out.try_emplace(key, LaurentPolynomial(1)).first;
      it->second.add_term(ExponentVector{e[z]}, c);
    }
    return out;
  };
  const auto ps = split(p);
  const auto qs = split(q);
  std::map<ExponentVector, MostlyLinearEntry> entries;
  for (const auto& [k, pk] : ps) entries[k].p_k = pk;
  for (const auto& [k, qk] : qs) entries[k].q_k = qk;

  MostlyLinearVerdict out;
  out.z = z;
  for (auto& [k, e] : entries) {
    e.k = k;
    if (e.q_k.is_zero()) {
      e.kind = MostlyLinearKind::kQZeroPNonzero;
      out.overall = false;
    } else if (e.p_k.is_zero()) {
      e.kind = MostlyLinearKind::kVacuous;
    } else {
      e.kind = MostlyLinearKind::kUnivariate;
      e.minton = minton_decide(RationalFunction(e.p_k, e.q_k));
      out.overall = out.overall && e.minton->has_gauss;
    }
    out.per_k.push_back(std::move(e));
  }
  return out;
}

Degree2Classification classify_degree2(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.nvars() != 2 || p.nvars() != 2) throw Error(ErrorCode::kDegree, "expected two variables");
  if (q.is_zero()) throw Error(ErrorCode::kZeroDenominator, "Q is zero");
  std::int64_t degree = 0;
  for (const auto& [k, c] : q.terms()) {
    if (k[0] < 0 || k[1] < 0) throw Error(ErrorCode::kDegree, "Q must be a polynomial");
    degree = std::max(degree, k[0] + k[1]);
  }
  if (degree != 2) throw Error(ErrorCode::kDegree, "Q must have total degree 2");

  Degree2Classification out;
  auto via_mostly_linear = [&](const LaurentPolynomial& pp, const LaurentPolynomial& qq, std::size_t z) {
    out.mostly_linear = classify_mostly_linear(pp, qq, z);
    out.has_gauss = out.mostly_linear->overall;
    return out;
  };
  if (linear_in(q, 0)) {
    out.route = "mostly-linear";
    return via_mostly_linear(p, q, 1);
  }
  if (linear_in(q, 1)) {
    out.route = "mostly-linear";
    return via_mostly_linear(p, q, 0);
  }
  const Rational a = q.coefficient(ExponentVector{0, 0});
  if (a == 0) {
    // u = 1/x, v = y/x; Q/x^2 becomes linear in u.
    out.route = "reduced";
    ToroidalMap map{{{Rational(-1), Rational(-1)}, {Rational(0), Rational(1)}}};
    out.reduction = map;
    const ExponentVector shift{2, 0};
    return via_mostly_linear(toroidal_substitute(p, map).shifted(shift), toroidal_substitute(q, map).shifted(shift), 1);
  }

  out.route = "triangle";
  const Rational b = q.coefficient(ExponentVector{1, 0});
  const Rational c = q.coefficient(ExponentVector{0, 1});
  const Rational d = q.coefficient(ExponentVector{2, 0});
  const Rational e = q.coefficient(ExponentVector{1, 1});
  const Rational f = q.coefficient(ExponentVector{0, 2});
  // Each edge quadratic has two distinct rational roots iff its discriminant is a nonzero square.
  const struct {
    const char* name;
    ExponentVector mono;
    Rational disc;
  } edges[] = {
      {"x", ExponentVector{1, 0}, b * b - 4 * a * d},
      {"y", ExponentVector{0, 1}, c * c - 4 * a * f},
      {"x*y", ExponentVector{1, 1}, e * e - 4 * d * f},
  };
  std::vector<LaurentPolynomial> basis{q, q.euler(0), q.euler(1)};
  for (const auto& edge : edges) {
    if (edge.disc != 0 && is_rational_square(edge.disc)) {
      out.special_monomials.push_back(edge.name);
      basis.push_back(LaurentPolynomial::monomial(2, edge.mono));
    }
  }
  const std::vector<ExponentVector> monos{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  RationalMatrix cols(monos.size(), std::vector<Rational>(basis.size()));
  for (std::size_t r = 0; r < monos.size(); ++r) {
    for (std::size_t j = 0; j < basis.size(); ++j) cols[r][j] = basis[j].coefficient(monos[r]);
  }
  out.dim = static_cast<int>(rank(cols, basis.size()));
  for (const auto& bpoly : basis) out.basis.emplace_back(bpoly, q);

  bool inside = true;
  for (const auto& [k, coef] : p.terms()) {
    inside = inside && std::find(monos.begin(), monos.end(), k) != monos.end();
  }
  if (inside) {
    std::vector<Rational> rhs(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) rhs[r] = p.coefficient(monos[r]);
    out.has_gauss = solve(cols, rhs).has_value();
  }
  return out;
}

}  // namespace gausscong
