#include "frobenius/field.hpp"

#include <charconv>

#include "frobenius/error.hpp"

namespace frobenius {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxModulus) {
    throw Error(ErrorCode::FieldError,
                "modulus " + std::to_string(p) + " exceeds " + std::to_string(kMaxModulus));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::FieldError, "modulus " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Field parse_field(const std::string& tag) {
  if (tag == "Q") return Field::rationals();
  constexpr std::string_view prefix = "GF(";
  if (tag.size() > prefix.size() + 1 && tag.starts_with(prefix) && tag.back() == ')') {
    const char* first = tag.data() + prefix.size();
    const char* last = tag.data() + tag.size() - 1;
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return Field::prime(p);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorCode::FieldError, "modulus out of range in '" + tag + "'");
    }
  }
  throw Error(ErrorCode::FieldError, "unknown field '" + tag + "'");
}

}  // namespace frobenius
