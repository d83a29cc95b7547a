#include "frobenius/error.hpp"

namespace frobenius {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::BaseInvalid: return "BaseInvalid";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFiniteField: return "NotFiniteField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FieldError: return "FieldError";
    case ErrorCode::ScalarError: return "ScalarError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace frobenius
