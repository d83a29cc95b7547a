#include "frobenius/scalar.hpp"

#include <cctype>

#include "frobenius/error.hpp"
#include "frobenius/kernels.hpp"

namespace frobenius {
namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
  }
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }

Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long value) {
  if (field.is_rational()) return Scalar(field, mpq_class(value));
  return Scalar(field, reduce(mpz_class(value), field.modulus()));
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(field, std::move(q));
  }
  const std::uint32_t p = field.modulus();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::ScalarError, "denominator " + value.get_den().get_str() +
                                            " is not invertible in " + field.name());
  }
  const std::uint64_t num = reduce(value.get_num(), p);
  return Scalar(field, static_cast<std::uint32_t>(num * kernels::inverse_mod(den, p) % p));
}

Scalar Scalar::from_residue(const Field& field, std::uint64_t residue) {
  if (!field.is_prime_field()) {
    throw Error(ErrorCode::FieldMismatch, "residue requires a prime field");
  }
  return Scalar(field, static_cast<std::uint32_t>(residue % field.modulus()));
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw Error(ErrorCode::ScalarError, "cannot parse '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return from_rational(field, mpq_class(parse_integer(num)));
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ScalarError, "cannot parse '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ScalarError, "zero denominator in '" + std::string(text) + "'");
  return from_rational(field, mpq_class(parse_integer(num), d));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "rational() on " + field_.name());
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw Error(ErrorCode::FieldMismatch, "residue() on Q");
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  const std::uint32_t r = residue();
  return Scalar(field_, r == 0 ? 0u : field_.modulus() - r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ScalarError, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
  return Scalar(field_, kernels::inverse_mod(residue(), field_.modulus()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
  const std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
  return Scalar(a.field_, static_cast<std::uint32_t>(s % a.field_.modulus()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
  const std::uint64_t s = std::uint64_t{a.residue()} * b.residue();
  return Scalar(a.field_, static_cast<std::uint32_t>(s % a.field_.modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace frobenius
