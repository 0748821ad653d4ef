// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact sector spectra of H = F1 + F2, computed through either
// representation.  The occupation-number route assembles the sparse sector
// matrix directly; the first-quantized route projects the slot-wise operator
// action onto the normalized antisymmetric basis tensors.  The two routes
// share no operator code, which is what makes their agreement a meaningful
// check.

#pragma once

#include <string>
#include <vector>

#include "fockbridge/model_io.hpp"
#include "fockbridge/operators.hpp"

namespace fockbridge {

/// Cap on the sector dimension C(M, N) for dense diagonalization.
inline constexpr std::uint64_t kMaxSpectrumDim = 2000;

/// Agreement tolerance between the two routes.
inline constexpr double kSpectrumTolerance = 1e-10;

enum class Representation { FirstQuantized, SecondQuantized };

std::string to_string(Representation rep);

struct SpectrumResult {
  int num_orbitals = 0;
  int num_particles = 0;
  Representation representation = Representation::SecondQuantized;
  /// Ascending, length C(M, N).
  std::vector<double> eigenvalues;
};

/// Full ascending spectrum of H on the (M, N) sector.  Requires hermitian
/// one-body and two-body coefficients.  N = 0 yields the single eigenvalue
/// 0; N = 1 involves no pair term.
SpectrumResult compute_spectrum(const ModelFile& model, int num_particles,
                                Representation rep);

/// H = F1 + F2 assembled on the sector basis (F2 only when N >= 2).
SparseOperator build_hamiltonian(const ModelFile& model,
                                 const FockBasis& basis);

}  // namespace fockbridge
