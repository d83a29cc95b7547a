#include "frobenius/certificate.hpp"

#include <string>

#include "frobenius/error.hpp"
#include "frobenius/exact_core.hpp"

namespace frobenius {
namespace {

Matrix invert_basis(const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorCode::InternalDisagreement, "extended basis is singular");
  return *inv;
}

// The scalar multipliers tried for each perturbation direction, in order:
// 1, -1, 2, -2, ... over Q and 1, 2, ..., p-1 over GF(p).
std::optional<Scalar> nth_multiplier(const Field& field, std::size_t index) {
  if (field.is_rational()) {
    const long magnitude = static_cast<long>(index / 2) + 1;
    return Scalar::from_int(field, index % 2 == 0 ? magnitude : -magnitude);
  }
  if (index + 1 >= field.modulus()) return std::nullopt;
  return Scalar::from_residue(field, index + 1);
}

}  // namespace

CertificateResult construct_certificate(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_chain(a, b, c);
  CriteriaReport criteria = equality_criteria(a, b, c);
  if (!criteria.gap_zero) return std::move(*criteria.witness);

  const Field& field = b.field();
  const std::size_t n = b.rows();
  const std::size_t m = a.rows();
  const std::size_t q = c.cols();
  const Matrix bc = b * c;

  ConstructionTrace trace{
      .d_b = pivot_column_basis(b),
      .v_b = Matrix(field, 0, 0),
      .extended_basis = Matrix(field, 0, 0),
      .v_tilde = Matrix(field, 0, 0),
      .m = Matrix(field, 0, 0),
      .y_images = Matrix(field, 0, 0),
  };
  trace.v_b = kernel_basis(a * trace.d_b);
  trace.s = trace.v_b.cols();
  trace.r = trace.d_b.cols();
  const std::size_t s = trace.s;
  const std::size_t r = trace.r;

  // D_B v_1 .. D_B v_s span Rg(B) ∩ Ker(A); the extension supplies the rest.
  trace.extended_basis = extend_basis(trace.d_b * trace.v_b, b);
  const Matrix head = trace.extended_basis.columns(0, s);
  const Matrix tail = trace.extended_basis.columns(s, r - s);

  // Y sends A D_B v_k to D_B v_k and is zero on a complement of Rg(AB).
  trace.y_images = a * tail;
  if (!has_full_column_rank(trace.y_images)) {
    throw Error(ErrorCode::InternalDisagreement, "images A D_B v_k are dependent");
  }
  const Matrix range_ab_basis = extend_basis(trace.y_images, Matrix::identity(field, m));
  const Matrix y = hconcat(tail, Matrix(field, n, m - (r - s))) * invert_basis(range_ab_basis);

  auto v_tilde = solve_right(bc, head);
  if (!v_tilde) {
    throw Error(ErrorCode::InternalDisagreement, "Rg(B) ∩ Ker(A) not inside Rg(BC)");
  }
  trace.v_tilde = std::move(*v_tilde);

  // M sends D_B v_j to v~_j and is zero on D_B v_k (k > s) and on a
  // complement of Rg(B).
  const Matrix range_b_basis = extend_basis(trace.extended_basis, Matrix::identity(field, n));
  trace.m = hconcat(trace.v_tilde, Matrix(field, q, n - s)) * invert_basis(range_b_basis);

  EqualityCertificate cert{trace.m * b, y, std::move(trace)};
  if (!verify_certificate(a, b, c, cert.x, cert.y)) {
    throw Error(ErrorCode::InternalDisagreement, "constructed certificate does not verify");
  }
  return cert;
}

bool verify_certificate(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& x,
                        const Matrix& y) {
  require_chain(a, b, c);
  require_same_field(b, x);
  require_same_field(b, y);
  if (x.rows() != c.cols() || x.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "X must be " + std::to_string(c.cols()) + "x" + std::to_string(b.cols()));
  }
  if (y.rows() != b.rows() || y.cols() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Y must be " + std::to_string(b.rows()) + "x" + std::to_string(a.rows()));
  }
  return (b - b * c * x - y * a * b).is_zero();
}

std::vector<std::pair<Matrix, Matrix>> solution_family(const Matrix& a, const Matrix& b,
                                                       const Matrix& c, const Matrix& x,
                                                       const Matrix& y, std::size_t count) {
  if (!verify_certificate(a, b, c, x, y)) {
    throw Error(ErrorCode::BaseInvalid, "base pair does not satisfy B = BCX + YAB");
  }
  const Field& field = b.field();
  const Matrix ker_bc = kernel_basis(b * c);
  const Matrix left_null_ab = kernel_basis((a * b).transpose());

  // Unit perturbations: a Ker(BC) vector in one column of X, or a left null
  // vector of AB in one row of Y.
  struct Atom {
    bool on_x;
    Matrix delta;
  };
  std::vector<Atom> atoms;
  for (std::size_t slot = 0; slot < x.cols(); ++slot) {
    for (std::size_t t = 0; t < ker_bc.cols(); ++t) {
      Matrix k(field, x.rows(), x.cols());
      for (std::size_t i = 0; i < x.rows(); ++i) k.set(i, slot, ker_bc.at(i, t));
      atoms.push_back({true, std::move(k)});
    }
  }
  for (std::size_t slot = 0; slot < y.rows(); ++slot) {
    for (std::size_t t = 0; t < left_null_ab.cols(); ++t) {
      Matrix l(field, y.rows(), y.cols());
      for (std::size_t j = 0; j < y.cols(); ++j) l.set(slot, j, left_null_ab.at(j, t));
      atoms.push_back({false, std::move(l)});
    }
  }

  std::vector<std::pair<Matrix, Matrix>> family;
  if (atoms.empty()) return family;
  for (std::size_t index = 0; family.size() < count; ++index) {
    const auto multiplier = nth_multiplier(field, index);
    if (!multiplier) break;
    for (const Atom& atom : atoms) {
      if (family.size() == count) break;
      const Matrix delta = scale(atom.delta, *multiplier);
      auto pair = atom.on_x ? std::make_pair(x + delta, y) : std::make_pair(x, y + delta);
      if (!verify_certificate(a, b, c, pair.first, pair.second)) {
        throw Error(ErrorCode::InternalDisagreement, "perturbed pair does not verify");
      }
      family.push_back(std::move(pair));
    }
  }
  return family;
}

}  // namespace frobenius
