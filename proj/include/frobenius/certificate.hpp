#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "frobenius/analysis.hpp"
#include "frobenius/matrix.hpp"

namespace frobenius {

/// Intermediates of the quotient-space construction of (X, Y).
struct ConstructionTrace {
  Matrix d_b;             // pivot columns of B
  Matrix v_b;             // kernel basis of A * D_B, s columns
  std::size_t s = 0;      // dim(Rg(B) ∩ Ker(A))
  std::size_t r = 0;      // rank(B)
  Matrix extended_basis;  // D_B v_1 .. D_B v_r, a basis of Rg(B)
  Matrix v_tilde;         // BC * v_tilde = first s columns of extended_basis
  Matrix m;               // q x n, X = M * B
  Matrix y_images;        // A * D_B v_k for k = s+1..r, a basis of Rg(AB)
};

struct EqualityCertificate {
  Matrix x;  // q x p
  Matrix y;  // n x m
  ConstructionTrace trace;
};

using CertificateResult = std::variant<EqualityCertificate, InequalityWitness>;

/// Builds X, Y with B = BCX + YAB when rank(ABC) + rank(B) = rank(AB) + rank(BC),
/// otherwise returns the witness from equality_criteria().
CertificateResult construct_certificate(const Matrix& a, const Matrix& b, const Matrix& c);

/// True iff B - BC X - Y A B is exactly zero.
bool verify_certificate(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& x,
                        const Matrix& y);

/// Up to `count` further solutions (X + K, Y) and (X, Y + L) with BC K = 0 and
/// L AB = 0, in a fixed enumeration order. Throws BaseInvalid when (x, y)
/// does not verify.
std::vector<std::pair<Matrix, Matrix>> solution_family(const Matrix& a, const Matrix& b,
                                                       const Matrix& c, const Matrix& x,
                                                       const Matrix& y, std::size_t count);

}  // namespace frobenius
