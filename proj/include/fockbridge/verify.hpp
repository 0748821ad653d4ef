// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// The self-check suite: every algebraic property the library promises, run
// as named pass/fail checks on one (M, N) sector.  Exact properties are
// compared in integer arithmetic; floating-point properties report their
// max deviation against the shared tolerance.  Checks that exceed the
// desk-scale caps are reported as skipped rather than failing the run.

#pragma once

#include <cstdint>
#include <iosfwd>

#include "fockbridge/equivalence.hpp"

namespace fockbridge {

struct VerifyOptions {
  int num_orbitals = 4;
  int num_particles = 2;
  std::uint64_t seed = 1;
  int trials = 50;
  double tolerance = kEquivalenceTolerance;
  Fault fault = Fault::None;
};

/// Runs all checks on the requested sector.  Deterministic for fixed
/// options.  Oversized checks are reported as skipped, never as failures;
/// an invalid sector (N > M) or orbital count throws instead.
EquivalenceReport run_verify_suite(const VerifyOptions& options);

/// Human-readable listing: one PASS/FAIL/SKIP line per check plus a summary.
void write_report_text(std::ostream& out, const VerifyOptions& options,
                       const EquivalenceReport& report);

/// One JSON object per line per check with keys name, deviation, pass, and,
/// when set, note and skipped.  Byte-identical across reruns.
void write_report_json_lines(std::ostream& out,
                             const EquivalenceReport& report);

}  // namespace fockbridge
