#include "frobenius/analysis.hpp"

#include <string>

#include "frobenius/error.hpp"
#include "frobenius/exact_core.hpp"

namespace frobenius {

void require_chain(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_same_field(a, b);
  require_same_field(b, c);
  if (a.cols() != b.rows() || b.cols() != c.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "A " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", B " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", C " +
                    std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + " do not chain");
  }
}

RankProfile rank_profile(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_chain(a, b, c);
  const Matrix ab = a * b;
  RankProfile profile;
  profile.rank_b = rank(b);
  profile.rank_ab = rank(ab);
  profile.rank_bc = rank(b * c);
  profile.rank_abc = rank(ab * c);
  if (profile.lhs() < profile.rhs()) {
    throw Error(ErrorCode::InternalDisagreement, "negative Frobenius gap");
  }
  profile.gap = profile.lhs() - profile.rhs();
  return profile;
}

Matrix intersection_basis(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "intersection_basis: A.cols != B.rows");
  }
  const Matrix d_b = pivot_column_basis(b);
  return d_b * kernel_basis(a * d_b);
}

Matrix quotient_map_matrix(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_chain(a, b, c);
  const Matrix ab = a * b;
  const Matrix bc = b * c;
  const Matrix abc = ab * c;

  // Bases of Rg(B) and Rg(AB) whose leading columns span Rg(BC) and Rg(ABC).
  const Matrix domain_basis = extend_basis(pivot_column_basis(bc), b);
  const Matrix codomain_basis = extend_basis(pivot_column_basis(abc), ab);
  const std::size_t m1 = rank(bc);
  const std::size_t m2 = rank(abc);

  const auto coords = solve_right(codomain_basis, a * domain_basis);
  if (!coords) {
    throw Error(ErrorCode::InternalDisagreement, "A maps Rg(B) outside Rg(AB)");
  }
  return coords->block(m2, m1, codomain_basis.cols() - m2, domain_basis.cols() - m1);
}

CriteriaReport equality_criteria(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_chain(a, b, c);
  CriteriaReport report;
  report.gap_zero = rank_profile(a, b, c).gap == 0;

  const Matrix block = quotient_map_matrix(a, b, c);
  report.quotient_block_invertible = block.rows() == block.cols() && rank(block) == block.rows();

  const Matrix w_b = intersection_basis(a, b);
  const Matrix w_bc = intersection_basis(a, b * c);
  if (!solve_right(w_b, w_bc)) {
    throw Error(ErrorCode::InternalDisagreement, "Rg(BC) ∩ Ker(A) not inside Rg(B) ∩ Ker(A)");
  }
  report.intersections_equal = w_b.cols() == w_bc.cols();

  report.factor = solve_right(w_bc, w_b);
  report.factor_exists = report.factor.has_value();

  if (!report.gap_zero) {
    for (std::size_t j = 0; j < w_b.cols(); ++j) {
      Matrix v = w_b.column(j);
      if (!solve_right(w_bc, v)) {
        report.witness = InequalityWitness{std::move(v)};
        break;
      }
    }
    if (!report.witness) {
      throw Error(ErrorCode::InternalDisagreement, "positive gap but no witness column");
    }
  }

  const bool g = report.gap_zero;
  if (report.quotient_block_invertible != g || report.intersections_equal != g ||
      report.factor_exists != g) {
    throw Error(ErrorCode::InternalDisagreement,
                std::string("criteria disagree: gap_zero=") + (g ? "1" : "0") +
                    " quotient=" + (report.quotient_block_invertible ? "1" : "0") +
                    " intersections=" + (report.intersections_equal ? "1" : "0") +
                    " factor=" + (report.factor_exists ? "1" : "0"));
  }
  return report;
}

}  // namespace frobenius
