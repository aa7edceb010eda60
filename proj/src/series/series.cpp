#include "gausscong/series.hpp"

#include <algorithm>
#include <unordered_set>

#include "gausscong/error.hpp"

namespace gausscong {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Points of start + monoid(gens) with degree <= bound, sorted by (degree, lex).
std::vector<ExponentVector> graded_region(const std::vector<ExponentVector>& start,
                                          const std::vector<ExponentVector>& gens, const LinearForm& grading,
                                          std::int64_t bound) {
  std::unordered_set<ExponentVector, ExponentHash> seen;
  std::vector<ExponentVector> queue;
  for (const auto& k : start) {
    if (apply_form(grading, k) <= bound && seen.insert(k).second) queue.push_back(k);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      ExponentVector next = queue[i] + g;
      if (apply_form(grading, next) <= bound && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::pair<std::int64_t, ExponentVector>> keyed;
  keyed.reserve(queue.size());
  for (auto& k : queue) keyed.emplace_back(apply_form(grading, k), k);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ExponentVector> out;
  out.reserve(keyed.size());
  for (auto& [d, k] : keyed) out.push_back(k);
  return out;
}

}  // namespace

TruncatedLaurentSeries::TruncatedLaurentSeries(std::size_t nvars, ExponentVector vertex, LinearForm grading,
                                               std::int64_t bound, CoefficientMap coeffs,
                                               std::vector<ExponentVector> cone_generators,
                                               Rational vertex_coefficient)
    : nvars_(nvars),
      vertex_(std::move(vertex)),
      grading_(std::move(grading)),
      bound_(bound),
      gens_(std::move(cone_generators)),
      q_v_(std::move(vertex_coefficient)) {
  if (grading_.size() != nvars_ || vertex_.size() != nvars_) {
    throw Error(ErrorCode::kVariableMismatch, "series grading or vertex has the wrong length");
  }
  for (auto& [k, c] : coeffs) {
    if (k.size() != nvars_) throw Error(ErrorCode::kVariableMismatch, "series exponent has the wrong length");
    if (c == 0) continue;
    if (degree(k) > bound_) throw Error(ErrorCode::kOutOfTruncation, "coefficient " + k.to_string() + " lies beyond the bound");
    coeffs_.emplace(k, std::move(c));
  }
}

Rational TruncatedLaurentSeries::coefficient(const ExponentVector& k) const {
  if (!knows(k)) {
    throw Error(ErrorCode::kOutOfTruncation, "coefficient " + k.to_string() + " has degree " +
                                                 std::to_string(degree(k)) + " beyond the bound " + std::to_string(bound_));
  }
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<ExponentVector> TruncatedLaurentSeries::sorted_support() const {
  std::vector<ExponentVector> keys;
  keys.reserve(coeffs_.size());
  for (const auto& [k, c] : coeffs_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), GradedLex{});
  return keys;
}

std::string TruncatedLaurentSeries::dump() const {
  std::string out;
  for (const auto& k : sorted_support()) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      out += std::to_string(k[i]);
      out += ' ';
    }
    out += ": ";
    out += to_fraction_string(coeffs_.at(k));
    out += '\n';
  }
  return out;
}

TruncatedLaurentSeries expand_at_vertex(const RationalFunction& f, const ExponentVector& v, std::int64_t bound,
                                        const std::optional<LinearForm>& grading) {
  const LaurentPolynomial& Q = f.denominator();
  if (v.size() != f.nvars()) throw Error(ErrorCode::kVariableMismatch, "vertex has the wrong length");
  if (bound < 0) throw Error(ErrorCode::kInvalidArgument, "truncation bound must be nonnegative");
  const NewtonPolytope np = newton_polytope(Q);
  if (!is_vertex(np, v)) throw Error(ErrorCode::kNotVertex, v.to_string() + " is not a vertex of N(Q)");
  const Rational q_v = Q.coefficient(v);
  if (q_v == 0) throw Error(ErrorCode::kNotVertex, "vanishing vertex coefficient");

  LinearForm alpha = grading ? *grading : vertex_grading(np, v);
  if (alpha.size() != f.nvars()) throw Error(ErrorCode::kVariableMismatch, "grading has the wrong length");
  std::vector<std::pair<ExponentVector, Rational>> q_rest;
  std::vector<ExponentVector> gens;
  for (const auto& [k, c] : Q.terms()) {
    if (k == v) continue;
    const ExponentVector g = k - v;
    if (apply_form(alpha, g) <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "grading " + form_to_string(alpha) + " is not positive on " + g.to_string());
    }
    q_rest.emplace_back(g, c);
    gens.push_back(g);
  }

  const LaurentPolynomial P = f.numerator().shifted(-v);
  const std::vector<ExponentVector> region = graded_region(P.support(), gens, alpha, bound);
  const Rational inv = Rational(1) / q_v;
  CoefficientMap coeffs;
  coeffs.reserve(region.size());
  Rational acc;
  for (const auto& k : region) {
    acc = P.coefficient(k);
    for (const auto& [g, c] : q_rest) {
      auto it = coeffs.find(k - g);
      if (it != coeffs.end()) acc -= c * it->second;
    }
    if (acc != 0) coeffs.emplace(k, acc * inv);
  }
  return TruncatedLaurentSeries(f.nvars(), v, std::move(alpha), bound, std::move(coeffs), std::move(gens), q_v);
}

TruncatedLaurentSeries apply_up(const TruncatedLaurentSeries& s, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  const auto ip = static_cast<std::int64_t>(p);
  CoefficientMap out;
  for (const auto& [k, c] : s.coefficients()) {
    if (k.divisible_by(ip)) out.emplace(k.divided_by(ip), c);
  }
  ExponentVector vertex = s.vertex();
  for (std::size_t i = 1; i < s.nvars(); ++i) vertex = vertex.scaled(ip);
  return TruncatedLaurentSeries(s.nvars(), vertex, s.grading(), floor_div(s.bound(), ip), std::move(out),
                                s.cone_generators(), s.vertex_coefficient());
}

ProductFactorization product_factorization(const TruncatedLaurentSeries& s) {
  const ExponentVector zero(s.nvars());
  if (s.coefficient(zero) != 1) throw Error(ErrorCode::kConstantTerm, "product factorization needs constant term 1");
  std::vector<ExponentVector> gens;
  for (const auto& [k, c] : s.coefficients()) {
    if (k.is_zero()) continue;
    if (s.degree(k) <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "support point " + k.to_string() + " has nonpositive degree");
    }
    gens.push_back(k);
  }
  std::sort(gens.begin(), gens.end());
  std::vector<ExponentVector> index = graded_region({zero}, gens, s.grading(), s.bound());
  CoefficientMap g = s.coefficients();
  auto get = [&](const ExponentVector& k) {
    auto it = g.find(k);
    return it == g.end() ? Rational(0) : it->second;
  };
  ProductFactorization out;
  for (std::size_t i = 1; i < index.size(); ++i) {
    const ExponentVector& k = index[i];
    const Rational gk = get(k);
    if (gk == 0) continue;
    const Rational a = -gk;
    out.entries.push_back({k, a});
    // g <- g / (1 - a x^k), ascending so g_{m-k} is already updated.
    const std::int64_t dk = s.degree(k);
    for (std::size_t j = i; j < index.size(); ++j) {
      const ExponentVector& m = index[j];
      if (s.degree(m) < 2 * dk && m != k) continue;
      const Rational prev = get(m - k);
      if (prev == 0) continue;
      Rational& slot = g[m];
      slot += a * prev;
    }
  }
  return out;
}

TruncatedLaurentSeries expand_product(const ProductFactorization& pf, const TruncatedLaurentSeries& like) {
  const std::size_t n = like.nvars();
  CoefficientMap h;
  h.emplace(ExponentVector(n), Rational(1));
  for (const auto& [k, a] : pf.entries) {
    if (like.degree(k) <= 0) throw Error(ErrorCode::kInvalidArgument, "factor exponent must have positive degree");
    CoefficientMap next = h;
    for (const auto& [m, c] : h) {
      const ExponentVector t = m + k;
      if (like.degree(t) > like.bound()) continue;
      Rational& slot = next[t];
      slot -= a * c;
    }
    h = std::move(next);
  }
  return TruncatedLaurentSeries(n, like.vertex(), like.grading(), like.bound(), std::move(h), like.cone_generators(),
                                like.vertex_coefficient());
}

}  // namespace gausscong
