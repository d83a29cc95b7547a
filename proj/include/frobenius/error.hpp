#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobenius {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  NotIndependent,
  NotContained,
  InternalDisagreement,
  BaseInvalid,
  BudgetExceeded,
  NotFiniteField,
  ParseError,
  FieldError,
  ScalarError,
};

std::string_view to_string(ErrorCode code);

/// All failures raised by the library carry one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobenius
