#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gausscong/laurent.hpp"

namespace gausscong {

using LinearForm = std::vector<std::int64_t>;

/// {w : form(w) >= offset} meets the polytope exactly in `members` (form(w) = offset).
struct Face {
  LinearForm form;
  std::int64_t offset = 0;
  std::vector<ExponentVector> members;  // support points on the face, lexicographic
  int dim = 0;
};

/// Convex hull of a finite point set, with exact facet inequalities.
///
/// Facet forms live in the ambient space but vanish on coordinates that are
/// dependent on the affine hull, so they are only meaningful on points that
/// satisfy the hull equations.
struct NewtonPolytope {
  std::size_t ambient_dim = 0;
  std::vector<ExponentVector> points;    // distinct, lexicographic
  std::vector<ExponentVector> vertices;  // lexicographic
  int dim = 0;
  std::vector<Face> facets;
  std::vector<std::pair<LinearForm, std::int64_t>> hull_equations;  // form(w) = offset on the affine hull
};

/// Throws Error(kZeroInput) for an empty point set.
NewtonPolytope convex_hull(std::vector<ExponentVector> points);
/// Throws Error(kZeroInput) for P = 0.
NewtonPolytope newton_polytope(const LaurentPolynomial& p);

/// Whether w lies in the polytope.
bool polytope_contains_point(const NewtonPolytope& outer, const ExponentVector& w);
/// Throws Error(kVariableMismatch) on different ambient dimensions.
bool polytope_contains(const NewtonPolytope& inner, const NewtonPolytope& outer);

/// Every face, the polytope itself included, sorted by (dim, members).
std::vector<Face> faces(const NewtonPolytope& np);

/// The face cut out by form = offset, if form >= offset holds on the polytope and
/// equality is attained.
std::optional<Face> supported_face(const NewtonPolytope& np, const LinearForm& form, std::int64_t offset);

/// Integer form with form(k - v) > 0 on every other support point of the polytope.
/// Prefers all ones; otherwise the sum of facet normals at v.
/// Throws Error(kNotVertex) when v is not a vertex.
LinearForm vertex_grading(const NewtonPolytope& np, const ExponentVector& v);
LinearForm grading_form(const LaurentPolynomial& q, const ExponentVector& v);

bool is_vertex(const NewtonPolytope& np, const ExponentVector& v);

/// Weights (1, B, B^2, ...) with B = 1 + 2 * max |coordinate| over the given supports;
/// injective on the coordinate box, so its minimum over any support is attained once.
LinearForm generic_form(std::span<const LaurentPolynomial> polys);

std::int64_t apply_form(const LinearForm& form, const ExponentVector& k);

std::string form_to_string(const LinearForm& form);

}  // namespace gausscong
