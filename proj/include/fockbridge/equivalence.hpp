// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// The bridge between the two representations of N-fermion states: dense
// antisymmetric rank-N tensors on one side, occupation-number vectors on the
// other.  An antisymmetric tensor is determined by its entries on strictly
// ascending multi-indices, and those entries (times sqrt(N!)) are exactly
// the occupation-number amplitudes.  The check_* functions turn the defining
// operator identities into executable pass/fail probes; a Fault argument can
// route them through deliberately broken variants for negative-control
// testing.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockbridge/errors.hpp"
#include "fockbridge/first_quant.hpp"
#include "fockbridge/fock.hpp"
#include "fockbridge/operators.hpp"

namespace fockbridge {

/// Shared tolerance for equivalence deviations.
inline constexpr double kEquivalenceTolerance = 1e-12;

/// Deliberate corruptions available to negative-control checks.
enum class Fault {
  None,
  /// Assemble F2 with the annihilator pair in the wrong order.
  TwoBodyAnnihilatorOrder,
  /// Use annihilators whose parity count disagrees with the creators'.
  LadderSignMismatch,
};

std::string to_string(Fault fault);

/// Outcome of one named check.
struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

/// A batch of check outcomes with the inputs that produced them.
struct EquivalenceReport {
  std::uint64_t seed = 0;
  double tolerance = kEquivalenceTolerance;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult result) { checks.push_back(std::move(result)); }
  void merge(const EquivalenceReport& other);
};

/// Occupation-number vector of an antisymmetric tensor: the amplitude of the
/// basis state occupying {i_1 < ... < i_N} is sqrt(N!) * t(i_1, ..., i_N).
/// Verifies antisymmetry first (tolerance 1e-12 * max(1, |t|_max)) and
/// rejects tensors that fail it.  Norm-preserving on its domain.
FockVector to_fock(const FirstQuantTensor& t);

/// Inverse of to_fock: spreads each amplitude over the N! permutations of
/// its ascending index with alternating signs, scaled by 1/sqrt(N!).  The
/// image is antisymmetric by construction; N = 0 gives the rank-0 tensor
/// holding the vacuum amplitude.
FirstQuantTensor from_fock(const FockVector& v);

/// Compares the two routes of acting with a one-body operator on the
/// normalized antisymmetric state built from reference list p:
/// to_fock(apply_one_body(f, psi)) against build_one_body applied to
/// to_fock(psi).  Records the max amplitude deviation.
EquivalenceReport check_one_body_equivalence(const OneBodyMatrix& f,
                                             const ProductState& p);

/// Same comparison for a pair interaction; needs N >= 2.  The fault hook
/// assembles the occupation-number side with swapped annihilators.
EquivalenceReport check_two_body_equivalence(const TwoBodyTensor& g,
                                             const ProductState& p,
                                             Fault fault = Fault::None);

/// Verifies the single-substitution identity on creator strings: replacing
/// the slot-i creator of the reference string for p by adag_q equals acting
/// with adag_q a_{p_i} on the full reference string.  Both sides are applied
/// to the vacuum of M orbitals and compared exactly (amplitudes are signed
/// integers).  slot is 1-based.
bool check_single_substitution_identity(const ProductState& p, int slot,
                                        OrbitalIndex q, int num_orbitals,
                                        Fault fault = Fault::None);

/// Verifies the pair-substitution identity: replacing the creators at slots
/// i < l by adag_{q_i}, adag_{q_l} equals acting with
/// adag_{q_i} adag_{q_l} a_{p_l} a_{p_i} on the full reference string.
/// Exact comparison on the vacuum, as above.
bool check_pair_substitution_identity(const ProductState& p, int slot_i,
                                      int slot_l, OrbitalIndex q_i,
                                      OrbitalIndex q_l, int num_orbitals,
                                      Fault fault = Fault::None);

/// Confirms that an arbitrarily ordered product list and its creator string
/// agree: the antisymmetrized tensor of p, restricted to ascending indices,
/// must equal the ladder-string amplitudes entry for entry.  Integer
/// arithmetic on both sides; returns the max deviation, 0.0 when exact.
double permuted_correspondence_deviation(const ProductState& p,
                                         int num_orbitals);

}  // namespace fockbridge
