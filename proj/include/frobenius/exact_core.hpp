#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobenius/kernels.hpp"
#include "frobenius/matrix.hpp"

namespace frobenius {

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Canonical reduced row echelon form by Gauss-Jordan elimination. Columns
/// are scanned left to right and the pivot row is the first row at or below
/// the current one with a nonzero entry in that column.
RrefResult rref(const Matrix& m);

/// Same as rref() but with an explicit kernel table for prime-field inputs.
/// Ignored over Q.
RrefResult rref(const Matrix& m, const kernels::ModpKernels& kernels);

std::size_t rank(const Matrix& m);

/// Free-variable basis of {x : m x = 0}, one column per non-pivot column of
/// m in increasing order; the free variable is 1, the other free variables 0.
Matrix kernel_basis(const Matrix& m);

/// The pivot columns of m, i.e. its leftmost linearly independent columns.
Matrix pivot_column_basis(const Matrix& m);

/// Extends the independent columns of `partial` to a basis of the column span
/// of `space` by greedily appending pivot columns of `space`, left to right.
/// Throws NotIndependent or NotContained when the precondition fails.
Matrix extend_basis(const Matrix& partial, const Matrix& space);

/// Canonical particular solution Z of n * Z = m (free variables zero), or
/// nullopt when some column of m is outside the column span of n.
std::optional<Matrix> solve_right(const Matrix& n, const Matrix& m);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// True when the columns of m are linearly independent.
bool has_full_column_rank(const Matrix& m);

}  // namespace frobenius
