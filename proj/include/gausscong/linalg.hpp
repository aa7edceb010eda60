#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gausscong/rational.hpp"

namespace gausscong {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

struct RowEchelon {
  RationalMatrix rows;              // reduced, nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form over Q; every row must have ncols entries.
RowEchelon row_reduce(RationalMatrix m, std::size_t ncols);
std::size_t rank(const RationalMatrix& m, std::size_t ncols);
/// Basis of {x : m x = 0}, scaled to primitive integer vectors.
std::vector<std::vector<Integer>> integer_nullspace(const RationalMatrix& m, std::size_t ncols);
/// Some solution of a x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntegerMatrix m);

}  // namespace gausscong
