#pragma once

#include <cstdint>
#include <string>

namespace frobenius {

/// Largest modulus accepted for GF(p). Residues are stored as uint32 and
/// products of two residues must fit in uint64.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

/// Either the rationals or a prime field GF(p).
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws Error(FieldError) unless `p` is a prime not exceeding kMaxModulus.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

/// Parses "Q" or "GF(p)". Throws Error(FieldError).
Field parse_field(const std::string& tag);

}  // namespace frobenius
