#include "gausscong/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gausscong/error.hpp"
#include "gausscong/linalg.hpp"

namespace gausscong {

namespace {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::kOverflow, "linear form coefficient exceeds 64 bits");
  return z.get_si();
}

RationalMatrix differences(const std::vector<ExponentVector>& pts) {
  RationalMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(pts[0].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = Rational(static_cast<long>(pts[i][j] - pts[0][j]));
    m.push_back(std::move(row));
  }
  return m;
}

int affine_dim(const std::vector<ExponentVector>& pts) {
  if (pts.size() <= 1) return 0;
  return static_cast<int>(rank(differences(pts), pts[0].size()));
}

/// Calls fn on every k-subset of {0..n-1} given as an index vector.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool subset_of(const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::int64_t apply_form(const LinearForm& form, const ExponentVector& k) {
  if (form.size() != k.size()) throw Error(ErrorCode::kVariableMismatch, "linear form length mismatch");
  return k.dot(form);
}

std::string form_to_string(const LinearForm& form) {
  std::string s = "(";
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(form[i]);
  }
  return s + ")";
}

NewtonPolytope convex_hull(std::vector<ExponentVector> points) {
  if (points.empty()) throw Error(ErrorCode::kZeroInput, "convex hull of an empty set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  NewtonPolytope np;
  np.ambient_dim = points[0].size();
  np.points = points;
  const std::size_t n = np.ambient_dim;
  const ExponentVector& p0 = points[0];

  const RationalMatrix diffs = differences(points);
  const RowEchelon ech = row_reduce(diffs, n);
  const std::size_t d = ech.pivots.size();
  np.dim = static_cast<int>(d);
  for (const auto& e : integer_nullspace(diffs, n)) {
    LinearForm f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = to_int64(e[i]);
    np.hull_equations.emplace_back(f, apply_form(f, p0));
  }
  if (d == 0) {
    np.vertices = {p0};
    return np;
  }

  // Project injectively onto the pivot coordinates of the affine hull.
  std::vector<std::vector<std::int64_t>> proj(points.size(), std::vector<std::int64_t>(d));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) proj[i][j] = points[i][ech.pivots[j]];
  }

  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    IntegerMatrix rows;
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<Integer> row(d);
      for (std::size_t c = 0; c < d; ++c) row[c] = Integer(static_cast<long>(proj[idx[r]][c] - proj[idx[0]][c]));
      rows.push_back(std::move(row));
    }
    std::vector<Integer> normal(d);
    Integer g = 0;
    for (std::size_t c = 0; c < d; ++c) {
      IntegerMatrix minor;
      for (const auto& row : rows) {
        std::vector<Integer> mr;
        for (std::size_t cc = 0; cc < d; ++cc) {
          if (cc != c) mr.push_back(row[cc]);
        }
        minor.push_back(std::move(mr));
      }
      normal[c] = (c % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
      g = gcd(g, normal[c]);
    }
    if (g == 0) return;
    std::vector<std::int64_t> h(d);
    for (std::size_t c = 0; c < d; ++c) h[c] = to_int64(normal[c] / g);
    auto value = [&](std::size_t i) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < d; ++c) s = checked_add(s, checked_mul(h[c], proj[i][c]));
      return s;
    };
    std::int64_t off = value(idx[0]);
    bool above = true, below = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::int64_t v = value(i);
      if (v < off) above = false;
      if (v > off) below = false;
    }
    if (!above && !below) return;
    if (!above) {
      for (auto& x : h) x = -x;
      off = -off;
    }
    seen.emplace(h, off);
  });

  for (const auto& [h, off] : seen) {
    Face f;
    f.form.assign(n, 0);
    for (std::size_t c = 0; c < d; ++c) f.form[ech.pivots[c]] = h[c];
    f.offset = off;
    for (const auto& w : points) {
      if (apply_form(f.form, w) == off) f.members.push_back(w);
    }
    f.dim = static_cast<int>(d) - 1;
    np.facets.push_back(std::move(f));
  }

  for (const auto& w : points) {
    std::vector<ExponentVector> common = points;
    for (const auto& f : np.facets) {
      if (!std::binary_search(f.members.begin(), f.members.end(), w)) continue;
      std::vector<ExponentVector> next;
      std::set_intersection(common.begin(), common.end(), f.members.begin(), f.members.end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (common.size() == 1) np.vertices.push_back(w);
  }
  return np;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroInput, "Newton polytope of the zero polynomial");
  return convex_hull(p.support());
}

bool is_vertex(const NewtonPolytope& np, const ExponentVector& v) {
  return std::binary_search(np.vertices.begin(), np.vertices.end(), v);
}

bool polytope_contains_point(const NewtonPolytope& outer, const ExponentVector& w) {
  if (w.size() != outer.ambient_dim) throw Error(ErrorCode::kVariableMismatch, "point dimension mismatch");
  for (const auto& [f, off] : outer.hull_equations) {
    if (apply_form(f, w) != off) return false;
  }
  for (const auto& f : outer.facets) {
    if (apply_form(f.form, w) < f.offset) return false;
  }
  return true;
}

bool polytope_contains(const NewtonPolytope& inner, const NewtonPolytope& outer) {
  if (inner.ambient_dim != outer.ambient_dim) {
    throw Error(ErrorCode::kVariableMismatch, "polytopes live in different dimensions");
  }
  return std::all_of(inner.vertices.begin(), inner.vertices.end(),
                     [&](const ExponentVector& v) { return polytope_contains_point(outer, v); });
}

std::vector<Face> faces(const NewtonPolytope& np) {
  std::set<std::vector<ExponentVector>> member_sets;
  std::vector<std::vector<ExponentVector>> queue;
  for (const auto& f : np.facets) {
    if (member_sets.insert(f.members).second) queue.push_back(f.members);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& f : np.facets) {
      std::vector<ExponentVector> next;
      std::set_intersection(queue[qi].begin(), queue[qi].end(), f.members.begin(), f.members.end(),
                            std::back_inserter(next));
      if (!next.empty() && member_sets.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Face> out;
  for (const auto& members : member_sets) {
    Face face;
    face.form.assign(np.ambient_dim, 0);
    for (const auto& f : np.facets) {
      if (!subset_of(members, f.members)) continue;
      for (std::size_t i = 0; i < np.ambient_dim; ++i) face.form[i] = checked_add(face.form[i], f.form[i]);
      face.offset = checked_add(face.offset, f.offset);
    }
    face.members = members;
    face.dim = affine_dim(members);
    out.push_back(std::move(face));
  }
  Face whole;
  whole.form.assign(np.ambient_dim, 0);
  whole.members = np.points;
  whole.dim = np.dim;
  out.push_back(std::move(whole));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.members < b.members;
  });
  return out;
}

std::optional<Face> supported_face(const NewtonPolytope& np, const LinearForm& form, std::int64_t offset) {
  if (form.size() != np.ambient_dim) throw Error(ErrorCode::kVariableMismatch, "linear form length mismatch");
  Face face;
  face.form = form;
  face.offset = offset;
  for (const auto& w : np.points) {
    const std::int64_t v = apply_form(form, w);
    if (v < offset) return std::nullopt;
    if (v == offset) face.members.push_back(w);
  }
  if (face.members.empty()) return std::nullopt;
  face.dim = affine_dim(face.members);
  return face;
}

LinearForm vertex_grading(const NewtonPolytope& np, const ExponentVector& v) {
  if (!is_vertex(np, v)) throw Error(ErrorCode::kNotVertex, v.to_string() + " is not a vertex of the Newton polytope");
  const LinearForm ones(np.ambient_dim, 1);
  const bool ones_ok = std::all_of(np.points.begin(), np.points.end(), [&](const ExponentVector& w) {
    return w == v || apply_form(ones, w - v) > 0;
  });
  if (ones_ok) return ones;
  LinearForm h(np.ambient_dim, 0);
  for (const auto& f : np.facets) {
    if (!std::binary_search(f.members.begin(), f.members.end(), v)) continue;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = checked_add(h[i], f.form[i]);
  }
  return h;
}

LinearForm grading_form(const LaurentPolynomial& q, const ExponentVector& v) {
  return vertex_grading(newton_polytope(q), v);
}

LinearForm generic_form(std::span<const LaurentPolynomial> polys) {
  if (polys.empty()) throw Error(ErrorCode::kInvalidArgument, "generic form needs at least one polynomial");
  std::int64_t m = 0;
  for (const auto& p : polys) {
    for (const auto& [k, c] : p.terms()) {
      for (std::size_t i = 0; i < k.size(); ++i) m = std::max(m, k[i] < 0 ? -k[i] : k[i]);
    }
  }
  const std::int64_t base = checked_add(1, checked_mul(2, m));
  LinearForm w(polys.front().nvars());
  std::int64_t x = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = x;
    if (i + 1 < w.size()) x = checked_mul(x, base);
  }
  return w;
}

}  // namespace gausscong
