#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <doctest.h>

#include "frobenius/exact_core.hpp"
#include "frobenius/matrix.hpp"
#include "frobenius/oracle.hpp"

namespace doctest {
template <>
struct StringMaker<frobenius::Matrix> {
  static String convert(const frobenius::Matrix& m) { return frobenius::to_string(m).c_str(); }
};
}  // namespace doctest

namespace frobenius::testing {

inline Field Q() { return Field::rationals(); }
inline Field GF(std::uint64_t p) { return Field::prime(p); }

inline Scalar q(long num, long den = 1) {
  return Scalar::from_rational(Field::rationals(), mpq_class(num, den));
}

struct Example1 {
  Matrix a = Matrix::from_ints(Q(), {{1, 1}, {1, 1}, {0, 0}});
  Matrix b = Matrix::from_ints(Q(), {{1, 2, 3}, {0, 1, 0}});
  Matrix c = Matrix::from_ints(Q(), {{1, 1}, {0, -1}, {1, 0}});
};

/// X = [[0, -1/2, 0], [0, -1, 0]], Y = [[1, 0, 0], [0, 0, 0]].
inline Matrix example1_paper_x() {
  Matrix x(Q(), 2, 3);
  x.set(0, 1, q(-1, 2));
  x.set(1, 1, q(-1));
  return x;
}
inline Matrix example1_paper_y() { return Matrix::from_ints(Q(), {{1, 0, 0}, {0, 0, 0}}); }

/// A = C = diag(1, 0), B = I2: rank(ABC) + rank(B) = 3 > rank(AB) + rank(BC) = 2.
inline Triple strict_fixture(const Field& field) {
  return {Matrix::from_ints(field, {{1, 0}, {0, 0}}), Matrix::identity(field, 2),
          Matrix::from_ints(field, {{1, 0}, {0, 0}})};
}

/// Random matrix; rational entries n/d with |n| <= 3, d in {1, 2}.
inline Matrix random_matrix(SplitMix64& rng, const Field& field, std::size_t rows,
                            std::size_t cols) {
  InstanceSpec spec{field, {1, rows == 0 ? 1 : rows, cols == 0 ? 1 : cols, 1}, rng.next(), {}};
  Matrix m = random_instance(spec).b;
  return m.block(0, 0, rows, cols);
}

/// Every element of GF(p)^(rows x cols), in lexicographic order.
inline std::vector<Matrix> all_matrices(const Field& field, std::size_t rows, std::size_t cols) {
  const std::uint32_t p = field.modulus();
  std::vector<Matrix> out;
  std::vector<std::uint32_t> digits(rows * cols, 0);
  while (true) {
    Matrix m(field, rows, cols);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      m.set(k / cols, k % cols, Scalar::from_residue(field, digits[k]));
    }
    out.push_back(std::move(m));
    std::size_t i = digits.size();
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// rank over GF(p) from the size of the column span: |span| = p^rank.
/// Enumerates every combination of columns; tiny inputs only.
inline std::size_t rank_by_span_size(const Matrix& m) {
  const Field& field = m.field();
  std::vector<std::vector<std::uint32_t>> seen;
  for (const Matrix& coeffs : all_matrices(field, m.cols(), 1)) {
    const Matrix v = m * coeffs;
    std::vector<std::uint32_t> key(v.residue_data().begin(), v.residue_data().end());
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(std::move(key));
  }
  std::size_t rank = 0;
  for (std::size_t size = 1; size < seen.size(); size *= field.modulus()) ++rank;
  return rank;
}

/// Solvability of B = BCX + YAB by enumerating X and Y as Matrix values with
/// generic arithmetic; independent of the packed-residue search in oracle.cpp.
inline bool naive_solvable(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Matrix bc = b * c;
  const Matrix ab = a * b;
  for (const Matrix& x : all_matrices(b.field(), c.cols(), b.cols())) {
    for (const Matrix& y : all_matrices(b.field(), b.rows(), a.rows())) {
      if (b == bc * x + y * ab) return true;
    }
  }
  return false;
}

}  // namespace frobenius::testing
