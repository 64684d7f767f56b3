#pragma once

#include <optional>
#include <vector>

#include "forms/rational.hpp"

namespace forms {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Scales by a positive rational so entries are coprime integers with the
// first nonzero entry positive; the zero vector is returned unchanged.
Vec normalized_primitive(Vec v);

// Exact null-space basis of the row matrix, one vector per free column, in
// free-column order, each normalized_primitive. Fraction-free (Bareiss)
// forward elimination with deterministic pivoting: columns left to right,
// first remaining row with a nonzero entry.
std::vector<Vec> kernel_basis(const Mat& rows, int ncols);

int matrix_rank(const Mat& rows, int ncols);

// Coefficients y with sum_r y[r] * rows[r] == target, if target lies in the
// row space (free coefficients set to zero).
std::optional<Vec> row_space_representation(const Mat& rows, const Vec& target);

}  // namespace forms
