// Command-line front end. Exit codes: 0 equality / success, 1 strict
// inequality (or a failed check), 2 usage or input error, 3 internal
// disagreement between criteria.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobenius/certificate.hpp"
#include "frobenius/error.hpp"
#include "frobenius/io.hpp"
#include "frobenius/oracle.hpp"

namespace {

using namespace frobenius;

constexpr int kExitEquality = 0;
constexpr int kExitStrict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::ParseError, "bad dimension '" + item + "'");
    }
    dims.push_back(v);
  }
  if (dims.size() != 4) throw Error(ErrorCode::ParseError, "--dims takes m,n,p,q");
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and certify equality in rank(ABC) + rank(B) >= rank(AB) + rank(BC)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string instance_path;
  std::string cert_path;
  bool with_trace = false;
  std::size_t family_size = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string gen_field = "Q";
  std::string gen_dims;
  std::uint64_t gen_seed = 0;
  long num_bound = 3;
  long den_bound = 2;

  auto* check = app.add_subcommand("check", "Rank profile and equality criteria");
  check->add_option("file", instance_path, "Instance file")->required();

  auto* certify = app.add_subcommand("certify", "Report plus certificate or witness");
  certify->add_option("file", instance_path, "Instance file")->required();
  certify->add_flag("--trace", with_trace, "Include the construction trace");

  auto* verify = app.add_subcommand("verify", "Check a proposed X, Y");
  verify->add_option("file", instance_path, "Instance file")->required();
  verify->add_option("--cert", cert_path, "Certificate file")->required();

  auto* family = app.add_subcommand("family", "Further solutions from a certificate");
  family->add_option("file", instance_path, "Instance file")->required();
  family->add_option("--cert", cert_path, "Certificate file")->required();
  family->add_option("-n", family_size, "Number of pairs");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over GF(p)");
  oracle->add_option("file", instance_path, "Instance file")->required();
  oracle->add_option("--budget", budget, "Maximum number of (X, Y) candidates");

  auto* gen = app.add_subcommand("gen", "Seeded random instance");
  gen->add_option("--field", gen_field, "Q or GF(p)");
  gen->add_option("--dims", gen_dims, "m,n,p,q")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--num-bound", num_bound, "Rational numerators in [-b, b]");
  gen->add_option("--den-bound", den_bound, "Rational denominators in [1, b]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  const Format format = format_name == "json" ? Format::Json : Format::Text;

  try {
    if (gen->parsed()) {
      const auto dims = parse_dims(gen_dims);
      InstanceSpec spec;
      spec.field = parse_field(gen_field);
      spec.dims = {dims[0], dims[1], dims[2], dims[3]};
      spec.seed = gen_seed;
      spec.pool = {num_bound, den_bound};
      Triple t = random_instance(spec);
      std::cout << serialize_instance(Instance{spec.field, t.a, t.b, t.c});
      return kExitEquality;
    }

    const Instance inst = parse_instance(read_file(instance_path));

    if (check->parsed() || certify->parsed()) {
      const Report report = analyze(inst, certify->parsed(), with_trace);
      std::cout << emit_report(report, format);
      return report.equality() ? kExitEquality : kExitStrict;
    }
    if (verify->parsed()) {
      const auto [x, y] = parse_certificate(inst.field, read_file(cert_path));
      const bool valid = verify_certificate(inst.a, inst.b, inst.c, x, y);
      std::cout << emit_verification(inst.field, valid, format);
      return valid ? kExitEquality : kExitStrict;
    }
    if (family->parsed()) {
      const auto [x, y] = parse_certificate(inst.field, read_file(cert_path));
      const auto pairs = solution_family(inst.a, inst.b, inst.c, x, y, family_size);
      std::cout << emit_family(inst.field, pairs, format);
      return kExitEquality;
    }
    if (oracle->parsed()) {
      const std::uint64_t candidates = candidate_count(inst.a, inst.b, inst.c);
      const bool solvable = brute_force_solvable(inst.a, inst.b, inst.c, budget);
      std::cout << emit_oracle(inst.field, candidates, solvable, format);
      return solvable ? kExitEquality : kExitStrict;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalDisagreement ? kExitInternal : kExitInput;
  }
  return kExitInput;
}
