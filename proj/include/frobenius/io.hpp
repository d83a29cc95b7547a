#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobenius/analysis.hpp"
#include "frobenius/certificate.hpp"
#include "frobenius/field.hpp"
#include "frobenius/matrix.hpp"

namespace frobenius {

/// An A, B, C triple as read from an instance file:
///   {"field": "Q" | "GF(p)",
///    "A": {"rows": r, "cols": c, "data": [["1", "-1/2"], ...]}, "B": ..., "C": ...}
struct Instance {
  Field field = Field::rationals();
  Matrix a{Field::rationals(), 0, 0};
  Matrix b{Field::rationals(), 0, 0};
  Matrix c{Field::rationals(), 0, 0};
};

/// Throws ParseError, FieldError, DimensionMismatch or ScalarError.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

/// Reads {"X": matrix, "Y": matrix}, either at top level or under
/// "certificate" (so a `certify` JSON report can be passed back in).
std::pair<Matrix, Matrix> parse_certificate(const Field& field, std::string_view text);

enum class Format { Json, Text };

struct Report {
  Field field = Field::rationals();
  RankProfile profile;
  CriteriaReport criteria;
  std::optional<EqualityCertificate> certificate;
  std::optional<InequalityWitness> witness;
  bool include_trace = false;

  bool equality() const { return criteria.gap_zero; }
};

/// Runs rank_profile and equality_criteria; with `certify` also
/// construct_certificate, filling exactly one of certificate / witness.
Report analyze(const Instance& instance, bool certify, bool include_trace = false);

/// Deterministic. JSON keys are sorted; text is one "key=value" per line
/// followed by bracketed matrix rows.
std::string emit_report(const Report& report, Format format);

std::string emit_verification(const Field& field, bool valid, Format format);
std::string emit_family(const Field& field,
                        const std::vector<std::pair<Matrix, Matrix>>& family,
                        Format format);
std::string emit_oracle(const Field& field, std::uint64_t candidates, bool solvable,
                        Format format);

}  // namespace frobenius
