// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random matrix elements and state vectors for property checks.
// Entries have real and imaginary parts uniform in [-1, 1]; structured
// variants impose exchange symmetry or hermiticity by group averaging, which
// preserves the distribution's support inside the symmetric subspace.

#pragma once

#include <cstdint>
#include <random>

#include "fockbridge/first_quant.hpp"
#include "fockbridge/fock.hpp"

namespace fockbridge {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng);

/// Dense f with iid complex entries.
OneBodyMatrix random_one_body(int num_orbitals, Rng& rng);

/// Random f with f = f^dagger, by averaging with its own adjoint.
OneBodyMatrix random_hermitian_one_body(int num_orbitals, Rng& rng);

/// Random g with the pair-exchange symmetry g(a,b,c,d) = g(b,a,d,c).
TwoBodyTensor random_exchange_symmetric_two_body(int num_orbitals, Rng& rng);

/// Random g with exchange symmetry and pair hermiticity
/// g(a,b,c,d) = conj(g(c,d,a,b)).  The two symmetrizations commute, so
/// averaging over the four-element group they generate lands exactly in the
/// intersection.
TwoBodyTensor random_hermitian_two_body(int num_orbitals, Rng& rng);

/// Random occupation-number vector with iid complex amplitudes on every
/// basis state of the sector.
FockVector random_fock_vector(int num_orbitals, int num_particles, Rng& rng);

/// Random dense tensor with iid complex entries.
FirstQuantTensor random_tensor(int num_orbitals, int num_particles, Rng& rng);

}  // namespace fockbridge
