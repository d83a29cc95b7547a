#include "frobenius/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "frobenius/error.hpp"
#include "frobenius/kernels.hpp"

namespace frobenius {
namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  }
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rational()) {
    data_ = std::vector<mpq_class>(rows * cols);
  } else {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  Matrix m(field, nrows, ncols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar::from_int(field, v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_entries(const Field& field, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& entries) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(entries.size()) + " entries for " + std::to_string(rows) +
                    "x" + std::to_string(cols));
  }
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.set(k / cols, k % cols, entries[k]);
  return m;
}

Matrix Matrix::column_vector(const Field& field, std::initializer_list<long> values) {
  Matrix m(field, values.size(), 1);
  std::size_t i = 0;
  for (long v : values) m.set(i++, 0, Scalar::from_int(field, v));
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  const std::size_t k = i * cols_ + j;
  if (field_.is_rational()) return Scalar::from_rational(field_, rational_data()[k]);
  return Scalar::from_residue(field_, residue_data()[k]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (value.field() != field_) {
    throw Error(ErrorCode::FieldMismatch, value.field().name() + " entry in " + field_.name());
  }
  const std::size_t k = i * cols_ + j;
  if (field_.is_rational()) {
    rational_data()[k] = value.rational();
  } else {
    residue_data()[k] = value.residue();
  }
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  const std::size_t k = i * cols_ + j;
  if (field_.is_rational()) return sgn(rational_data()[k]) == 0;
  return residue_data()[k] == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    const auto d = rational_data();
    return std::all_of(d.begin(), d.end(), [](const mpq_class& q) { return sgn(q) == 0; });
  }
  const auto d = residue_data();
  return std::all_of(d.begin(), d.end(), [](std::uint32_t r) { return r == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(t.data_);
        for (std::size_t i = 0; i < rows_; ++i) {
          for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
        }
      },
      data_);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range of " + shape(*this));
  }
  Matrix b(field_, nrows, ncols);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(b.data_);
        for (std::size_t i = 0; i < nrows; ++i) {
          for (std::size_t j = 0; j < ncols; ++j) {
            dst[i * ncols + j] = src[(row0 + i) * cols_ + col0 + j];
          }
        }
      },
      data_);
  return b;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  return block(0, first, rows_, count);
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix s(field_, rows_, indices.size());
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(s.data_);
        for (std::size_t i = 0; i < rows_; ++i) {
          for (std::size_t k = 0; k < indices.size(); ++k) {
            if (indices[k] >= cols_) {
              throw Error(ErrorCode::DimensionMismatch, "column index out of range");
            }
            dst[i * indices.size() + k] = src[i * cols_ + indices[k]];
          }
        }
      },
      data_);
  return s;
}

std::span<const mpq_class> Matrix::rational_data() const {
  return std::get<std::vector<mpq_class>>(data_);
}
std::span<mpq_class> Matrix::rational_data() { return std::get<std::vector<mpq_class>>(data_); }
std::span<const std::uint32_t> Matrix::residue_data() const {
  return std::get<std::vector<std::uint32_t>>(data_);
}
std::span<std::uint32_t> Matrix::residue_data() {
  return std::get<std::vector<std::uint32_t>>(data_);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + shape(lhs) + " by " + shape(rhs));
  }
  const std::size_t n = lhs.rows();
  const std::size_t inner = lhs.cols();
  const std::size_t m = rhs.cols();
  Matrix out(lhs.field(), n, m);
  if (lhs.field().is_rational()) {
    const auto a = lhs.rational_data();
    const auto b = rhs.rational_data();
    auto c = out.rational_data();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        const mpq_class& f = a[i * inner + k];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] += f * b[k * m + j];
      }
    }
    return out;
  }
  // Row i of the product accumulates lhs(i, k) * rhs row k.
  const std::uint32_t p = lhs.field().modulus();
  const auto& kernels = kernels::select(p);
  const auto a = lhs.residue_data();
  const auto b = rhs.residue_data();
  auto c = out.residue_data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint32_t f = a[i * inner + k];
      if (f == 0) continue;
      kernels.axpy(c.data() + i * m, b.data() + k * m, m, f, p);
    }
  }
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return matmul(lhs, rhs); }

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot add " + shape(lhs) + " and " + shape(rhs));
  }
  Matrix out = lhs;
  if (lhs.field().is_rational()) {
    auto c = out.rational_data();
    const auto b = rhs.rational_data();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  } else {
    const std::uint32_t p = lhs.field().modulus();
    kernels::select(p).axpy(out.residue_data().data(), rhs.residue_data().data(),
                            out.residue_data().size(), 1, p);
  }
  return out;
}

Matrix scale(const Matrix& m, const Scalar& factor) {
  if (factor.field() != m.field()) throw Error(ErrorCode::FieldMismatch, "scale");
  Matrix out = m;
  if (m.field().is_rational()) {
    for (auto& q : out.rational_data()) q *= factor.rational();
  } else {
    const std::uint32_t p = m.field().modulus();
    kernels::select(p).scale(out.residue_data().data(), out.residue_data().size(),
                             factor.residue(), p);
  }
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  return lhs + scale(rhs, -Scalar::one(rhs.field()));
}

Matrix hconcat(const Matrix& lhs, const Matrix& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.rows() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot concatenate " + shape(lhs) + " and " + shape(rhs));
  }
  const std::size_t cols = lhs.cols() + rhs.cols();
  Matrix out(lhs.field(), lhs.rows(), cols);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out.set(i, j, lhs.at(i, j));
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.set(i, lhs.cols() + j, rhs.at(i, j));
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << m.field().name() << ' ' << shape(m) << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace frobenius
