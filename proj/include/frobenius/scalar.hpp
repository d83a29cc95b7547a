#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "frobenius/field.hpp"

namespace frobenius {

/// An exact field element in canonical form: a reduced fraction with
/// positive denominator over Q, or a residue in [0, p) over GF(p).
class Scalar {
 public:
  static Scalar zero(const Field& field);
  static Scalar one(const Field& field);
  static Scalar from_int(const Field& field, long value);
  /// Over GF(p) the denominator must be invertible mod p (ScalarError otherwise).
  static Scalar from_rational(const Field& field, const mpq_class& value);
  /// Requires a prime field; `residue` is reduced mod p.
  static Scalar from_residue(const Field& field, std::uint64_t residue);

  /// Accepts "n" or "n/d" with optional leading sign. Throws Error(ScalarError).
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;

  /// Valid only over Q.
  const mpq_class& rational() const;
  /// Valid only over GF(p).
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // ScalarError on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Reduced "a/b", a bare integer, or a residue.
  std::string to_string() const;

 private:
  using Value = std::variant<mpq_class, std::uint32_t>;

  Scalar(Field field, Value value) : field_(field), value_(std::move(value)) {}

  Field field_;
  Value value_;
};

}  // namespace frobenius
