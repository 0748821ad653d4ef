// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "fockbridge/model_io.hpp"
#include "fockbridge/random_inputs.hpp"

using namespace fockbridge;

namespace {

ModelFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_model(in);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("model files parse coefficients into dense tables") {
  const ModelFile model = parse(
      "# two orbitals with one hop\n"
      "M 2\n"
      "\n"
      "[one_body]\n"
      "1 2 0.5 -1.0   # hop with phase\n"
      "[two_body]\n"
      "1 2 1 2 4.0 0.0\n");
  CHECK(model.num_orbitals == 2);
  CHECK(model.one_body(1, 2) == Complex(0.5, -1.0));
  CHECK(model.one_body(2, 1) == Complex(0.0, 0.0));
  CHECK(model.two_body(1, 2, 1, 2) == Complex(4.0, 0.0));
  // The exchange partner is filled in automatically.
  CHECK(model.two_body(2, 1, 2, 1) == Complex(4.0, 0.0));
  CHECK(model.two_body.has_exchange_symmetry(1e-12));
}

TEST_CASE("parse errors carry 1-based line numbers") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("orbitals 3\n") == 1);
  CHECK(parse_error_line("M 0\n") == 1);
  CHECK(parse_error_line("M 25\n") == 1);
  CHECK(parse_error_line("M 3\n1 2 0.0 0.0\n") == 2);
  CHECK(parse_error_line("M 3\n[one_body]\n1 2 0.0\n") == 3);
  CHECK(parse_error_line("M 3\n[one_body]\n1 4 0.0 0.0\n") == 3);
  CHECK(parse_error_line("M 3\n[one_body]\n1 x 0.0 0.0\n") == 3);
  CHECK(parse_error_line("M 3\n[one_body]\n1 2 0.0 oops\n") == 3);
  CHECK(parse_error_line("M 3\n[unknown]\n") == 2);
  CHECK(parse_error_line("M 3\n[two_body]\n1 2 1 2 1.0\n") == 3);
  // Duplicates are rejected where the second copy appears.
  CHECK(parse_error_line(
            "M 3\n[one_body]\n1 2 1.0 0.0\n1 2 2.0 0.0\n") == 4);
  CHECK(parse_error_line(
            "M 3\n[two_body]\n1 2 1 2 1.0 0.0\n1 2 1 2 1.0 0.0\n") == 4);
}

TEST_CASE("exchange partners may repeat only with equal values") {
  const ModelFile ok = parse(
      "M 2\n[two_body]\n"
      "1 2 1 2 4.0 0.0\n"
      "2 1 2 1 4.0 0.0\n");
  CHECK(ok.two_body(1, 2, 1, 2) == Complex(4.0, 0.0));

  CHECK(parse_error_line("M 2\n[two_body]\n"
                         "1 2 1 2 4.0 0.0\n"
                         "2 1 2 1 3.0 0.0\n") == 4);
}

TEST_CASE("missing files and headers are reported") {
  CHECK_THROWS_AS(load_model("/nonexistent/model.txt"), Error);
  CHECK_THROWS_AS(parse("# nothing here\n"), ParseError);
}

TEST_CASE("operator dumps are deterministic and reload exactly") {
  Rng rng(301);
  const FockBasis basis(3, 2);
  const SparseOperator op =
      build_one_body(random_one_body(3, rng), basis);

  std::ostringstream first;
  write_operator_dump(first, op);
  std::ostringstream second;
  write_operator_dump(second, op);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("# basis legend") != std::string::npos);
  CHECK(first.str().find("{1,2}") != std::string::npos);

  std::istringstream back(first.str());
  const SparseOperator reloaded = read_operator_dump(back, basis);
  REQUIRE(reloaded.entry_count() == op.entry_count());
  for (const auto& [key, value] : op.entries()) {
    // 17 significant digits round-trip every double exactly.
    CHECK(reloaded.entry(key.first, key.second) == value);
  }

  // Applying the reloaded operator reproduces the original action.
  const FockVector v = random_fock_vector(3, 2, rng);
  CHECK(max_abs_diff(apply(op, v), apply(reloaded, v)) == 0.0);
}

TEST_CASE("dump reader validates entry positions") {
  const FockBasis basis(3, 2);
  std::istringstream bad_pos("5 0 1.0 0.0\n");
  CHECK_THROWS_AS(read_operator_dump(bad_pos, basis), ParseError);
  std::istringstream bad_fields("0 0 1.0\n");
  CHECK_THROWS_AS(read_operator_dump(bad_fields, basis), ParseError);
}
