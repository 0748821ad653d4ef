// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Exit codes: 0 all checks passed / output
// produced, 1 a check failed, 2 bad input or usage.

#include <exception>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fockbridge/model_io.hpp"
#include "fockbridge/spectrum.hpp"
#include "fockbridge/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

fockbridge::Fault parse_fault(const std::string& name) {
  if (name == "none") return fockbridge::Fault::None;
  if (name == "two-body-order") return fockbridge::Fault::TwoBodyAnnihilatorOrder;
  if (name == "ladder-signs") return fockbridge::Fault::LadderSignMismatch;
  throw fockbridge::Error("unknown fault '" + name + "'");
}

int run_verify(const fockbridge::VerifyOptions& options,
               const std::string& format) {
  const fockbridge::EquivalenceReport report =
      fockbridge::run_verify_suite(options);
  if (format == "json-lines") {
    fockbridge::write_report_json_lines(std::cout, report);
  } else {
    fockbridge::write_report_text(std::cout, options, report);
  }
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

void print_spectrum(const fockbridge::SpectrumResult& result) {
  std::cout << "spectrum M=" << result.num_orbitals << " N="
            << result.num_particles << " rep="
            << fockbridge::to_string(result.representation) << '\n';
  std::cout << std::setprecision(17);
  for (std::size_t j = 0; j < result.eigenvalues.size(); ++j) {
    std::cout << j << ' ' << result.eigenvalues[j] << '\n';
  }
}

int run_spectrum(const std::string& model_path, int particles,
                 const std::string& rep) {
  const fockbridge::ModelFile model = fockbridge::load_model(model_path);
  using fockbridge::Representation;
  if (rep == "first" || rep == "second") {
    print_spectrum(fockbridge::compute_spectrum(
        model, particles,
        rep == "first" ? Representation::FirstQuantized
                       : Representation::SecondQuantized));
    return kExitPass;
  }
  // rep == "both": print both routes and check their agreement.
  const auto first = fockbridge::compute_spectrum(
      model, particles, Representation::FirstQuantized);
  const auto second = fockbridge::compute_spectrum(
      model, particles, Representation::SecondQuantized);
  print_spectrum(first);
  print_spectrum(second);
  double dev = 0.0;
  for (std::size_t j = 0; j < first.eigenvalues.size(); ++j) {
    dev = std::max(dev,
                   std::abs(first.eigenvalues[j] - second.eigenvalues[j]));
  }
  std::cout << "agreement max_deviation=" << std::setprecision(3)
            << std::scientific << dev << " tolerance="
            << fockbridge::kSpectrumTolerance << '\n';
  return dev <= fockbridge::kSpectrumTolerance ? kExitPass : kExitCheckFailed;
}

int run_dump(const std::string& model_path, int particles,
             const std::string& op_name) {
  const fockbridge::ModelFile model = fockbridge::load_model(model_path);
  const fockbridge::FockBasis basis(model.num_orbitals, particles);
  fockbridge::SparseOperator op(basis);
  if (op_name == "f1") {
    op = fockbridge::build_one_body(model.one_body, basis);
  } else if (op_name == "f2") {
    op = particles >= 2
             ? fockbridge::build_two_body(model.two_body, basis)
             : fockbridge::SparseOperator(basis);
  } else {
    op = fockbridge::build_hamiltonian(model, basis);
  }
  fockbridge::write_operator_dump(std::cout, op);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fockbridge: exact fermionic ladder operators, antisymmetric tensors, "
      "and the checks tying the two representations together"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the full self-check suite on one (M, N) sector");
  fockbridge::VerifyOptions options;
  std::string fault_name = "none";
  std::string format = "text";
  verify_cmd->add_option("--orbitals,-M", options.num_orbitals,
                         "orbital count M")
      ->required();
  verify_cmd->add_option("--particles,-N", options.num_particles,
                         "particle count N")
      ->required();
  verify_cmd->add_option("--seed", options.seed, "random seed");
  verify_cmd->add_option("--trials", options.trials,
                         "random trials per probabilistic check")
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--fault", fault_name,
                   "inject a deliberate defect (negative-control hook)")
      ->check(CLI::IsMember({"none", "two-body-order", "ladder-signs"}));
  verify_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // spectrum
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "exact sector spectrum of H = F1 + F2 from a model file");
  std::string model_path;
  int particles = 0;
  std::string rep = "both";
  spectrum_cmd->add_option("--model", model_path, "model file path")
      ->required();
  spectrum_cmd->add_option("--particles,-N", particles, "particle count N")
      ->required();
  spectrum_cmd->add_option("--rep", rep, "representation to diagonalize in")
      ->check(CLI::IsMember({"first", "second", "both"}));

  // dump
  auto* dump_cmd = app.add_subcommand(
      "dump", "deterministic text dump of an assembled sector matrix");
  std::string dump_model_path;
  int dump_particles = 0;
  std::string op_name = "h";
  dump_cmd->add_option("--model", dump_model_path, "model file path")
      ->required();
  dump_cmd->add_option("--particles,-N", dump_particles, "particle count N")
      ->required();
  dump_cmd->add_option("--op", op_name, "operator to dump")
      ->check(CLI::IsMember({"f1", "f2", "h"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error.
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (verify_cmd->parsed()) {
      options.fault = parse_fault(fault_name);
      return run_verify(options, format);
    }
    if (spectrum_cmd->parsed()) {
      return run_spectrum(model_path, particles, rep);
    }
    return run_dump(dump_model_path, dump_particles, op_name);
  } catch (const fockbridge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
}
