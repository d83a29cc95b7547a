#pragma once

#include <cstddef>
#include <optional>

#include "frobenius/matrix.hpp"

namespace frobenius {

/// Ranks appearing in rank(ABC) + rank(B) >= rank(AB) + rank(BC).
struct RankProfile {
  std::size_t rank_b = 0;    // n1
  std::size_t rank_ab = 0;   // n2
  std::size_t rank_bc = 0;   // m1
  std::size_t rank_abc = 0;  // m2
  std::size_t gap = 0;       // m2 + n1 - n2 - m1

  std::size_t lhs() const { return rank_abc + rank_b; }
  std::size_t rhs() const { return rank_ab + rank_bc; }

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// A vector of Rg(B) ∩ Ker(A) that lies outside Rg(BC) ∩ Ker(A).
struct InequalityWitness {
  Matrix vector;  // n x 1
};

struct CriteriaReport {
  bool gap_zero = false;
  bool quotient_block_invertible = false;
  bool intersections_equal = false;
  bool factor_exists = false;
  std::optional<Matrix> factor;  // Z with D_B V_B = D_BC V_BC Z
  std::optional<InequalityWitness> witness;
};

/// Checks A.cols == B.rows, B.cols == C.rows and a shared field.
void require_chain(const Matrix& a, const Matrix& b, const Matrix& c);

RankProfile rank_profile(const Matrix& a, const Matrix& b, const Matrix& c);

/// D_B * V_B, a basis of Rg(B) ∩ Ker(A), with D_B the pivot columns of B and
/// V_B the kernel basis of A * D_B.
Matrix intersection_basis(const Matrix& a, const Matrix& b);

/// Matrix of the induced map Rg(B)/Rg(BC) -> Rg(AB)/Rg(ABC), x -> Ax, in the
/// quotient bases obtained by extending pivot bases of Rg(BC) and Rg(ABC).
/// Shape (n2 - m2) x (n1 - m1).
Matrix quotient_map_matrix(const Matrix& a, const Matrix& b, const Matrix& c);

/// Evaluates the four equivalent equality tests independently and throws
/// InternalDisagreement if they do not agree.
CriteriaReport equality_criteria(const Matrix& a, const Matrix& b, const Matrix& c);

}  // namespace frobenius
