#include "frobenius/exact_core.hpp"

#include <algorithm>
#include <utility>

#include "frobenius/error.hpp"

namespace frobenius {
namespace {

RrefResult rref_rational(const Matrix& m) {
  RrefResult out{m, {}, 0};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto d = out.rref.rational_data();
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return d[i * cols + j]; };

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(row, j));
    }
    const mpq_class inv = 1 / at(row, col);
    for (std::size_t j = col; j < cols; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(at(i, col)) == 0) continue;
      const mpq_class f = at(i, col);
      for (std::size_t j = col; j < cols; ++j) at(i, j) -= f * at(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

// Rows below the current pivot row are zero left of `col`, so every row
// operation only touches columns col..cols-1.
RrefResult rref_modp(const Matrix& m, const kernels::ModpKernels& k) {
  RrefResult out{m, {}, 0};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint32_t p = m.field().modulus();
  std::uint32_t* d = out.rref.residue_data().data();
  auto row_ptr = [&](std::size_t i) { return d + i * cols; };

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && row_ptr(pivot)[col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) std::swap_ranges(row_ptr(pivot) + col, row_ptr(pivot) + cols, row_ptr(row) + col);
    const std::size_t width = cols - col;
    k.scale(row_ptr(row) + col, width, kernels::inverse_mod(row_ptr(row)[col], p), p);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::uint32_t f = row_ptr(i)[col];
      if (i == row || f == 0) continue;
      k.axpy(row_ptr(i) + col, row_ptr(row) + col, width, p - f, p);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

void require_same_rows(const Matrix& a, const Matrix& b, const char* what) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": row counts " + std::to_string(a.rows()) + " and " +
                    std::to_string(b.rows()));
  }
}

}  // namespace

RrefResult rref(const Matrix& m, const kernels::ModpKernels& kernels) {
  if (m.field().is_rational()) return rref_rational(m);
  return rref_modp(m, kernels);
}

RrefResult rref(const Matrix& m) {
  if (m.field().is_rational()) return rref_rational(m);
  return rref_modp(m, kernels::select(m.field().modulus()));
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool has_full_column_rank(const Matrix& m) { return rank(m) == m.cols(); }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  const Field& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  Matrix basis(field, m.cols(), m.cols() - r.rank);
  const Scalar one = Scalar::one(field);
  std::size_t t = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(f, t, one);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (!r.rref.entry_is_zero(i, f)) basis.set(r.pivot_cols[i], t, -r.rref.at(i, f));
    }
    ++t;
  }
  return basis;
}

Matrix pivot_column_basis(const Matrix& m) { return m.select_columns(rref(m).pivot_cols); }

Matrix extend_basis(const Matrix& partial, const Matrix& space) {
  require_same_rows(partial, space, "extend_basis");
  if (!has_full_column_rank(partial)) {
    throw Error(ErrorCode::NotIndependent, "partial basis columns are dependent");
  }
  const std::size_t target = rank(space);
  if (rank(hconcat(space, partial)) != target) {
    throw Error(ErrorCode::NotContained, "partial basis leaves the column span of space");
  }
  Matrix chosen = partial;
  if (chosen.cols() == target) return chosen;
  const Matrix candidates = pivot_column_basis(space);
  for (std::size_t j = 0; j < candidates.cols() && chosen.cols() < target; ++j) {
    Matrix trial = hconcat(chosen, candidates.column(j));
    if (rank(trial) == trial.cols()) chosen = std::move(trial);
  }
  return chosen;
}

std::optional<Matrix> solve_right(const Matrix& n, const Matrix& m) {
  require_same_rows(n, m, "solve_right");
  const RrefResult r = rref(hconcat(n, m));
  if (r.rank > 0 && r.pivot_cols.back() >= n.cols()) return std::nullopt;

  Matrix z(n.field(), n.cols(), m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!r.rref.entry_is_zero(i, n.cols() + j)) {
        z.set(r.pivot_cols[i], j, r.rref.at(i, n.cols() + j));
      }
    }
  }
  return z;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  }
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_right(m, Matrix::identity(m.field(), m.rows()));
}

}  // namespace frobenius
