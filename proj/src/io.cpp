#include "frobenius/io.hpp"

#include <sstream>

#include <json.hpp>

#include "frobenius/error.hpp"

namespace frobenius {
namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& member(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  }
  return object.at(key);
}

std::size_t count_member(const json& object, const char* key, const std::string& where) {
  const json& v = member(object, key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, where + "." + key + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Matrix matrix_from_json(const Field& field, const json& j, const std::string& name) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, name + " must be an object");
  const std::size_t rows = count_member(j, "rows", name);
  const std::size_t cols = count_member(j, "cols", name);
  const json& data = member(j, "data");
  if (!data.is_array() || data.size() != rows) {
    throw Error(ErrorCode::ParseError, name + ".data must hold " + std::to_string(rows) + " rows");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::ParseError,
                  name + ".data[" + std::to_string(i) + "] must hold " + std::to_string(cols) + " entries");
    }
    for (std::size_t jj = 0; jj < cols; ++jj) {
      if (!row[jj].is_string()) {
        throw Error(ErrorCode::ScalarError, name + " entries must be strings");
      }
      m.set(i, jj, Scalar::parse(field, row[jj].get<std::string>()));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* flag(bool b) { return b ? "true" : "false"; }

void write_matrix(std::ostream& os, const std::string& name, const Matrix& m) {
  os << name << '=' << m.rows() << 'x' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).to_string();
    os << "]\n";
  }
}

json trace_to_json(const ConstructionTrace& t) {
  return json{{"D_B", matrix_to_json(t.d_b)},
              {"V_B", matrix_to_json(t.v_b)},
              {"s", t.s},
              {"r", t.r},
              {"extended_basis", matrix_to_json(t.extended_basis)},
              {"v_tilde", matrix_to_json(t.v_tilde)},
              {"M", matrix_to_json(t.m)},
              {"Y_images", matrix_to_json(t.y_images)}};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
  const json& tag = member(doc, "field");
  if (!tag.is_string()) throw Error(ErrorCode::FieldError, "field must be a string");
  Instance inst;
  inst.field = parse_field(tag.get<std::string>());
  inst.a = matrix_from_json(inst.field, member(doc, "A"), "A");
  inst.b = matrix_from_json(inst.field, member(doc, "B"), "B");
  inst.c = matrix_from_json(inst.field, member(doc, "C"), "C");
  require_chain(inst.a, inst.b, inst.c);
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  return dump(json{{"field", instance.field.name()},
                   {"A", matrix_to_json(instance.a)},
                   {"B", matrix_to_json(instance.b)},
                   {"C", matrix_to_json(instance.c)}});
}

std::pair<Matrix, Matrix> parse_certificate(const Field& field, std::string_view text) {
  const json doc = parse_document(text);
  const json& cert = doc.is_object() && doc.contains("certificate") ? doc.at("certificate") : doc;
  return {matrix_from_json(field, member(cert, "X"), "X"),
          matrix_from_json(field, member(cert, "Y"), "Y")};
}

Report analyze(const Instance& instance, bool certify, bool include_trace) {
  Report report;
  report.field = instance.field;
  report.profile = rank_profile(instance.a, instance.b, instance.c);
  report.criteria = equality_criteria(instance.a, instance.b, instance.c);
  report.include_trace = include_trace;
  if (certify) {
    auto result = construct_certificate(instance.a, instance.b, instance.c);
    if (auto* cert = std::get_if<EqualityCertificate>(&result)) {
      report.certificate = std::move(*cert);
    } else {
      report.witness = std::get<InequalityWitness>(std::move(result));
    }
  }
  return report;
}

std::string emit_report(const Report& report, Format format) {
  const RankProfile& rp = report.profile;
  const CriteriaReport& cr = report.criteria;
  const char* verdict = report.equality() ? "equality" : "strict";

  if (format == Format::Json) {
    json j{{"field", report.field.name()},
           {"rank_profile",
            {{"rank_B", rp.rank_b},
             {"rank_AB", rp.rank_ab},
             {"rank_BC", rp.rank_bc},
             {"rank_ABC", rp.rank_abc},
             {"lhs", rp.lhs()},
             {"rhs", rp.rhs()},
             {"gap", rp.gap}}},
           {"criteria",
            {{"gap_zero", cr.gap_zero},
             {"quotient_block_invertible", cr.quotient_block_invertible},
             {"intersections_equal", cr.intersections_equal},
             {"factor_exists", cr.factor_exists}}},
           {"verdict", verdict}};
    if (report.certificate) {
      j["certificate"] = {{"X", matrix_to_json(report.certificate->x)},
                          {"Y", matrix_to_json(report.certificate->y)}};
      if (report.include_trace) j["trace"] = trace_to_json(report.certificate->trace);
    }
    if (report.witness) j["witness"] = matrix_to_json(report.witness->vector);
    return dump(j);
  }

  std::ostringstream os;
  os << "field=" << report.field.name() << '\n'
     << "rank(B)=" << rp.rank_b << '\n'
     << "rank(AB)=" << rp.rank_ab << '\n'
     << "rank(BC)=" << rp.rank_bc << '\n'
     << "rank(ABC)=" << rp.rank_abc << '\n'
     << "rank(ABC)+rank(B)=" << rp.lhs() << '\n'
     << "rank(AB)+rank(BC)=" << rp.rhs() << '\n'
     << "gap=" << rp.gap << '\n'
     << "gap_zero=" << flag(cr.gap_zero) << '\n'
     << "quotient_block_invertible=" << flag(cr.quotient_block_invertible) << '\n'
     << "intersections_equal=" << flag(cr.intersections_equal) << '\n'
     << "factor_exists=" << flag(cr.factor_exists) << '\n'
     << "verdict=" << verdict << '\n';
  if (report.certificate) {
    write_matrix(os, "X", report.certificate->x);
    write_matrix(os, "Y", report.certificate->y);
    if (report.include_trace) {
      const ConstructionTrace& t = report.certificate->trace;
      os << "trace.s=" << t.s << '\n' << "trace.r=" << t.r << '\n';
      write_matrix(os, "trace.D_B", t.d_b);
      write_matrix(os, "trace.V_B", t.v_b);
      write_matrix(os, "trace.extended_basis", t.extended_basis);
      write_matrix(os, "trace.v_tilde", t.v_tilde);
      write_matrix(os, "trace.M", t.m);
      write_matrix(os, "trace.Y_images", t.y_images);
    }
  }
  if (report.witness) write_matrix(os, "witness", report.witness->vector);
  return os.str();
}

std::string emit_verification(const Field& field, bool valid, Format format) {
  if (format == Format::Json) return dump(json{{"field", field.name()}, {"valid", valid}});
  return "field=" + field.name() + "\nvalid=" + flag(valid) + "\n";
}

std::string emit_family(const Field& field,
                        const std::vector<std::pair<Matrix, Matrix>>& family, Format format) {
  if (format == Format::Json) {
    json pairs = json::array();
    for (const auto& [x, y] : family) {
      pairs.push_back({{"X", matrix_to_json(x)}, {"Y", matrix_to_json(y)}});
    }
    return dump(json{{"field", field.name()}, {"count", family.size()}, {"pairs", std::move(pairs)}});
  }
  std::ostringstream os;
  os << "field=" << field.name() << '\n' << "count=" << family.size() << '\n';
  for (std::size_t k = 0; k < family.size(); ++k) {
    write_matrix(os, "X[" + std::to_string(k) + "]", family[k].first);
    write_matrix(os, "Y[" + std::to_string(k) + "]", family[k].second);
  }
  return os.str();
}

std::string emit_oracle(const Field& field, std::uint64_t candidates, bool solvable,
                        Format format) {
  if (format == Format::Json) {
    return dump(json{{"field", field.name()}, {"candidates", candidates}, {"solvable", solvable}});
  }
  return "field=" + field.name() + "\ncandidates=" + std::to_string(candidates) +
         "\nsolvable=" + flag(solvable) + "\n";
}

}  // namespace frobenius
