#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gausscong/linalg.hpp"
#include "gausscong/polytope.hpp"
#include "gausscong/ratfun.hpp"
#include "gausscong/univariate.hpp"

namespace gausscong {

/// det(theta_i f_j / f_j) over the given variables (default: the first m).
/// Constructions return the denominator with minimal exponents 0.
/// Every f_j must live in nvars variables. Throws kInvalidArgument if m exceeds
/// the variable count, kZeroInput for a zero f_j.
RationalFunction log_det_construct(std::span<const RationalFunction> fs, std::size_t nvars,
                                   std::span<const std::size_t> variables = {});

/// (q_k x^k / Q) det(theta_i f_j / f_j), with Q linear in each variable of
/// linear_vars and k in {0,1}^|linear_vars|. The f_j may not involve
/// linear_vars; the determinant runs over the first r entries of log_vars.
/// Throws kNotLinear when Q is not linear in linear_vars.
RationalFunction qdet_construct(const LaurentPolynomial& q, std::span<const std::size_t> linear_vars,
                                const ExponentVector& k, std::span<const RationalFunction> fs,
                                std::span<const std::size_t> log_vars);

/// P_F / Q_F: the monomials of P and Q supported on the face F of N(Q).
/// Throws kNotFace when the face does not belong to N(Q).
RationalFunction restrict_face(const RationalFunction& f, const Face& face);

/// x = y^A: column i of A is the image of the i-th old variable.
struct ToroidalMap {
  RationalMatrix a;  // rows: new variables, columns: old variables
  std::size_t rows() const noexcept { return a.size(); }
  std::size_t cols() const noexcept { return a.empty() ? 0 : a.front().size(); }
};

/// Remaps every exponent k to A k. Throws kInvalidArgument on a shape or rank
/// problem and kNonIntegralExponent when some A k is not integral.
LaurentPolynomial toroidal_substitute(const LaurentPolynomial& p, const ToroidalMap& map);
RationalFunction toroidal_substitute(const RationalFunction& f, const ToroidalMap& map);

/// (prod_j x_j g_j'(x_j) / g_j(x_j)) f(g_1(x_1), ..., g_n(x_n)) for univariate g_j.
RationalFunction substitute_univariate(const RationalFunction& f, std::span<const RationalFunction> gs);

/// det(theta_i g_j / g_j) f(g_1, ..., g_n), all g_j sharing one variable count.
RationalFunction substitute_multivariate(const RationalFunction& f, std::span<const RationalFunction> gs);

struct MintonTerm {
  Rational c;
  UPoly u;  // irreducible, u(0) = 1
};

struct MintonDecomposition {
  Rational constant;
  std::vector<MintonTerm> terms;

  /// constant + sum c_j x u_j' / u_j.
  RationalFunction recombine() const;
};

enum class MintonReason {
  kNone,
  kNewtonContainmentFails,
  kNonSimplePole,
  kResidueNotLogDerivative,
  kIrrationalResidueMismatch,
};

const char* minton_reason_name(MintonReason r) noexcept;

struct MintonVerdict {
  bool has_gauss = false;
  std::optional<MintonDecomposition> decomposition;
  MintonReason reason = MintonReason::kNone;
};

/// Decides the Gauss property of a univariate rational function.
/// Throws kVariableMismatch unless f has one variable, kZeroInput for f = 0.
MintonVerdict minton_decide(const RationalFunction& f);

/// N(P) inside N(Q) for Q with support in {0,1}^n. Throws kNotLinear otherwise.
bool classify_linear(const LaurentPolynomial& p, const LaurentPolynomial& q);

enum class MostlyLinearKind { kQZeroPNonzero, kUnivariate, kVacuous };

const char* mostly_linear_kind_name(MostlyLinearKind k) noexcept;

struct MostlyLinearEntry {
  ExponentVector k;  // exponents of the linear block
  MostlyLinearKind kind = MostlyLinearKind::kVacuous;
  LaurentPolynomial p_k{1};  // in the distinguished variable
  LaurentPolynomial q_k{1};
  std::optional<MintonVerdict> minton;
};

struct MostlyLinearVerdict {
  std::size_t z = 0;
  std::vector<MostlyLinearEntry> per_k;  // lexicographic in k
  bool overall = true;
};

/// P/Q where Q is linear in every variable except z. Throws kNotLinear otherwise.
MostlyLinearVerdict classify_mostly_linear(const LaurentPolynomial& p, const LaurentPolynomial& q, std::size_t z);

struct Degree2Classification {
  /// "triangle", "mostly-linear" (Q linear in x or y) or "reduced" (constant term 0).
  std::string route;
  std::optional<ToroidalMap> reduction;
  std::optional<MostlyLinearVerdict> mostly_linear;
  /// Triangle route only.
  std::optional<int> dim;
  std::vector<std::string> special_monomials;  // subset of {x, y, x*y}
  std::vector<RationalFunction> basis;         // B / Q
  bool has_gauss = false;                      // verdict for P
};

/// Q in two variables of total degree 2. Throws kDegree otherwise.
Degree2Classification classify_degree2(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace gausscong
