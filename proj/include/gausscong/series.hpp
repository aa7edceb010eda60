#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gausscong/polytope.hpp"
#include "gausscong/ratfun.hpp"

namespace gausscong {

using CoefficientMap = std::unordered_map<ExponentVector, Rational, ExponentHash>;

/// Coefficients of a Laurent expansion known on {k : grading(k) <= bound}.
///
/// Only nonzero coefficients are stored. A query inside the bound that is not
/// stored is a known zero; a query beyond the bound throws kOutOfTruncation.
class TruncatedLaurentSeries {
 public:
  TruncatedLaurentSeries(std::size_t nvars, ExponentVector vertex, LinearForm grading, std::int64_t bound,
                         CoefficientMap coeffs, std::vector<ExponentVector> cone_generators = {},
                         Rational vertex_coefficient = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const ExponentVector& vertex() const noexcept { return vertex_; }
  const LinearForm& grading() const noexcept { return grading_; }
  std::int64_t bound() const noexcept { return bound_; }
  /// Largest degree at which every coefficient is exact; equal to bound() here
  /// because the recursion determines each coefficient from lower degrees only.
  std::int64_t safe_bound() const noexcept { return bound_; }
  const std::vector<ExponentVector>& cone_generators() const noexcept { return gens_; }
  const Rational& vertex_coefficient() const noexcept { return q_v_; }
  const CoefficientMap& coefficients() const noexcept { return coeffs_; }

  std::int64_t degree(const ExponentVector& k) const { return apply_form(grading_, k); }
  bool knows(const ExponentVector& k) const { return degree(k) <= bound_; }
  Rational coefficient(const ExponentVector& k) const;

  /// Nonzero exponents in graded-lex order.
  std::vector<ExponentVector> sorted_support() const;
  /// One line "k1 ... kn : num/den" per nonzero coefficient, graded-lex order.
  std::string dump() const;

 private:
  std::size_t nvars_;
  ExponentVector vertex_;
  LinearForm grading_;
  std::int64_t bound_;
  CoefficientMap coeffs_;
  std::vector<ExponentVector> gens_;
  Rational q_v_;
};

/// Laurent expansion of f at vertex v of N(Q) with every coefficient of
/// grading degree <= bound. The grading defaults to vertex_grading; a supplied
/// grading must be positive on supp(Q) - v away from 0.
/// Throws kNotVertex, kInvalidArgument.
TruncatedLaurentSeries expand_at_vertex(const RationalFunction& f, const ExponentVector& v, std::int64_t bound,
                                        const std::optional<LinearForm>& grading = std::nullopt);

/// Coefficient at k of the result is the coefficient at p k; bound becomes floor(bound / p).
/// Throws kNotPrime.
TruncatedLaurentSeries apply_up(const TruncatedLaurentSeries& s, std::uint64_t p);

struct ProductFactor {
  ExponentVector exponent;
  Rational a;
};

/// s = prod (1 - a_k x^k) up to the bound; nonzero a_k only, ascending degree.
struct ProductFactorization {
  std::vector<ProductFactor> entries;
};

/// Requires constant term exactly 1 and positive degree on the rest of the support.
/// Throws kConstantTerm, kInvalidArgument.
ProductFactorization product_factorization(const TruncatedLaurentSeries& s);

/// The truncated product prod (1 - a_k x^k) with the grading and bound of `like`.
TruncatedLaurentSeries expand_product(const ProductFactorization& pf, const TruncatedLaurentSeries& like);

}  // namespace gausscong
