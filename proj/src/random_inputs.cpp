// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/random_inputs.hpp"

namespace fockbridge {

Complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const double re = uniform(rng);
  const double im = uniform(rng);
  return Complex(re, im);
}

OneBodyMatrix random_one_body(int num_orbitals, Rng& rng) {
  OneBodyMatrix f(num_orbitals);
  for (int alpha = 1; alpha <= num_orbitals; ++alpha) {
    for (int beta = 1; beta <= num_orbitals; ++beta) {
      f(alpha, beta) = random_complex(rng);
    }
  }
  return f;
}

OneBodyMatrix random_hermitian_one_body(int num_orbitals, Rng& rng) {
  OneBodyMatrix raw = random_one_body(num_orbitals, rng);
  OneBodyMatrix f(num_orbitals);
  for (int alpha = 1; alpha <= num_orbitals; ++alpha) {
    for (int beta = 1; beta <= num_orbitals; ++beta) {
      f(alpha, beta) = 0.5 * (raw(alpha, beta) + std::conj(raw(beta, alpha)));
    }
  }
  return f;
}

TwoBodyTensor random_exchange_symmetric_two_body(int num_orbitals, Rng& rng) {
  TwoBodyTensor raw(num_orbitals);
  for (int a = 1; a <= num_orbitals; ++a) {
    for (int b = 1; b <= num_orbitals; ++b) {
      for (int c = 1; c <= num_orbitals; ++c) {
        for (int d = 1; d <= num_orbitals; ++d) {
          raw(a, b, c, d) = random_complex(rng);
        }
      }
    }
  }
  return raw.symmetrized();
}

TwoBodyTensor random_hermitian_two_body(int num_orbitals, Rng& rng) {
  TwoBodyTensor raw = random_exchange_symmetric_two_body(num_orbitals, rng);
  TwoBodyTensor g(num_orbitals);
  for (int a = 1; a <= num_orbitals; ++a) {
    for (int b = 1; b <= num_orbitals; ++b) {
      for (int c = 1; c <= num_orbitals; ++c) {
        for (int d = 1; d <= num_orbitals; ++d) {
          g(a, b, c, d) = 0.5 * (raw(a, b, c, d) + std::conj(raw(c, d, a, b)));
        }
      }
    }
  }
  return g;
}

FockVector random_fock_vector(int num_orbitals, int num_particles, Rng& rng) {
  FockVector v(num_orbitals, num_particles);
  const FockBasis basis(num_orbitals, num_particles);
  for (const OccupationState& state : basis.states()) {
    v.add(state, random_complex(rng));
  }
  return v;
}

FirstQuantTensor random_tensor(int num_orbitals, int num_particles, Rng& rng) {
  FirstQuantTensor t(num_orbitals, num_particles);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = random_complex(rng);
  return t;
}

}  // namespace fockbridge
