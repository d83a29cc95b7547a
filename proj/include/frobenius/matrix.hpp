#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "frobenius/field.hpp"
#include "frobenius/scalar.hpp"

namespace frobenius {

/// Dense row-major matrix over a single field. Rational matrices hold
/// mpq_class entries; prime-field matrices hold packed uint32 residues so the
/// mod-p kernels can run directly on the storage. Zero-row and zero-column
/// matrices are valid; a 0-column matrix is the empty basis.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Integer literal rows, mostly for tests and fixtures. Ragged input throws
  /// DimensionMismatch.
  static Matrix from_ints(const Field& field,
                          std::initializer_list<std::initializer_list<long>> rows);
  /// `entries` in row-major order; every entry must belong to `field`.
  static Matrix from_entries(const Field& field, std::size_t rows, std::size_t cols,
                             const std::vector<Scalar>& entries);
  static Matrix column_vector(const Field& field, std::initializer_list<long> values);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);
  bool is_zero() const;
  bool entry_is_zero(std::size_t i, std::size_t j) const;

  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
               std::size_t ncols) const;

  // Raw storage, row-major. Only the accessor matching field().kind() is valid.
  std::span<const mpq_class> rational_data() const;
  std::span<mpq_class> rational_data();
  std::span<const std::uint32_t> residue_data() const;
  std::span<std::uint32_t> residue_data();

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  using Storage = std::variant<std::vector<mpq_class>, std::vector<std::uint32_t>>;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

/// Throws DimensionMismatch or FieldMismatch.
Matrix matmul(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator+(const Matrix& lhs, const Matrix& rhs);
Matrix operator-(const Matrix& lhs, const Matrix& rhs);
Matrix scale(const Matrix& m, const Scalar& factor);

/// [lhs | rhs]; row counts must agree.
Matrix hconcat(const Matrix& lhs, const Matrix& rhs);

/// "[[1, -1/2], [0, 3]]" style rendering for diagnostics.
std::string to_string(const Matrix& m);

void require_same_field(const Matrix& a, const Matrix& b);

}  // namespace frobenius
