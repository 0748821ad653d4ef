// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented model files holding one- and two-body matrix elements, plus
// deterministic text dumps of assembled sector matrices.
//
// Format:
//   # comment (also allowed after values)
//   M <int>
//   [one_body]
//   <alpha> <beta> <re> <im>
//   [two_body]
//   <alpha> <beta> <gamma> <delta> <re> <im>
//
// Blank lines are ignored.  Each coefficient may be listed once; a two-body
// entry fixes its exchange partner (beta, alpha, delta, gamma) to the same
// value, which may be listed explicitly only with an equal value.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fockbridge/first_quant.hpp"
#include "fockbridge/operators.hpp"

namespace fockbridge {

/// Parsed model: orbital count plus dense coefficient tables (absent entries
/// are zero).  The two-body table is exchange-symmetric by construction.
struct ModelFile {
  explicit ModelFile(int num_orbitals)
      : num_orbitals(num_orbitals),
        one_body(num_orbitals),
        two_body(num_orbitals) {}

  int num_orbitals;
  OneBodyMatrix one_body;
  TwoBodyTensor two_body;
};

/// Parses a model from a stream.  Throws ParseError with the 1-based line
/// number on malformed input, duplicate entries, or exchange conflicts.
ModelFile parse_model(std::istream& in);

/// Loads a model file from disk.
ModelFile load_model(const std::filesystem::path& path);

/// Writes "row col re im" lines for every stored entry, ordered by (row,
/// col), preceded by a legend mapping basis positions to occupied-orbital
/// sets.  Values print with 17 significant digits, so a reload reproduces
/// every double bit for bit and rerunning the dump is byte-identical.
void write_operator_dump(std::ostream& out, const SparseOperator& op);

/// Reads entries from a dump back into an operator over the given basis.
/// Legend and comment lines are skipped.
SparseOperator read_operator_dump(std::istream& in, const FockBasis& basis);

}  // namespace fockbridge
