// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/operators.hpp"

#include <algorithm>
#include <cmath>

namespace fockbridge {

void SparseOperator::add_entry(std::size_t row, std::size_t col,
                               Complex value) {
  if (row >= dim() || col >= dim()) {
    throw SectorMismatch("entry (" + std::to_string(row) + ", " +
                         std::to_string(col) + ") outside a " +
                         std::to_string(dim()) + "-dimensional sector");
  }
  entries_[{row, col}] += value;
}

Complex SparseOperator::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

void SparseOperator::prune(double eps) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (std::abs(it->second) <= eps) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

bool SparseOperator::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (const auto& [key, value] : entries_) {
    if (std::abs(value - std::conj(entry(key.second, key.first))) >
        tol * scale) {
      return false;
    }
  }
  return true;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [key, value] : entries_) m = std::max(m, std::abs(value));
  return m;
}

SparseOperator build_one_body(const OneBodyMatrix& f, const FockBasis& basis) {
  if (f.num_orbitals() != basis.num_orbitals()) {
    throw ShapeMismatch("one-body matrix dimension " +
                        std::to_string(f.num_orbitals()) +
                        " does not match basis orbital count " +
                        std::to_string(basis.num_orbitals()));
  }
  const int m = basis.num_orbitals();
  SparseOperator op(basis);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationState s = basis.state(col);
    // Only occupied beta survive a_beta, and only vacant alpha (after the
    // annihilation) survive adag_alpha; everything else is a structural zero.
    for (int beta : s.occupied_orbitals()) {
      const SignedState after_a = apply_annihilation(OrbitalIndex(beta), s, m);
      for (int alpha = 1; alpha <= m; ++alpha) {
        const OrbitalIndex alpha_idx(alpha);
        if (after_a.state().occupied(alpha_idx)) continue;
        const Complex c = f(alpha, beta);
        if (c == Complex(0.0, 0.0)) continue;
        const SignedState after_c =
            apply_creation(alpha_idx, after_a.state(), m);
        const std::size_t row = basis.position(after_c.state());
        op.add_entry(row, col,
                     static_cast<double>(after_a.sign() * after_c.sign()) * c);
      }
    }
  }
  op.prune(0.0);
  return op;
}

namespace {

SparseOperator build_two_body_impl(const TwoBodyTensor& g,
                                   const FockBasis& basis,
                                   bool swap_annihilators) {
  if (g.num_orbitals() != basis.num_orbitals()) {
    throw ShapeMismatch("two-body tensor dimension " +
                        std::to_string(g.num_orbitals()) +
                        " does not match basis orbital count " +
                        std::to_string(basis.num_orbitals()));
  }
  if (!g.has_exchange_symmetry(1e-12)) {
    throw SymmetryError(
        "two-body matrix elements lack the exchange symmetry "
        "g(a,b,c,d) = g(b,a,d,c)");
  }
  const int m = basis.num_orbitals();
  SparseOperator op(basis);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationState s = basis.state(col);
    const std::vector<int> occupied = s.occupied_orbitals();
    for (int gamma : occupied) {
      for (int delta : occupied) {
        if (delta == gamma) continue;  // a_delta a_gamma kills gamma = delta
        // Standard order applies a_gamma first, then a_delta.  The swapped
        // variant reverses that, negating the pair sign.
        const int first = swap_annihilators ? delta : gamma;
        const int second = swap_annihilators ? gamma : delta;
        const SignedState r1 = apply_annihilation(OrbitalIndex(first), s, m);
        const SignedState r2 =
            apply_annihilation(OrbitalIndex(second), r1.state(), m);
        const int annihilation_sign = r1.sign() * r2.sign();
        const OccupationState holes = r2.state();
        for (int beta = 1; beta <= m; ++beta) {
          const OrbitalIndex beta_idx(beta);
          if (holes.occupied(beta_idx)) continue;
          const SignedState r3 = apply_creation(beta_idx, holes, m);
          for (int alpha = 1; alpha <= m; ++alpha) {
            if (alpha == beta) continue;  // adag_alpha adag_beta kills alpha = beta
            const OrbitalIndex alpha_idx(alpha);
            if (r3.state().occupied(alpha_idx)) continue;
            const Complex c = g(alpha, beta, gamma, delta);
            if (c == Complex(0.0, 0.0)) continue;
            const SignedState r4 = apply_creation(alpha_idx, r3.state(), m);
            const std::size_t row = basis.position(r4.state());
            const double sign = static_cast<double>(
                annihilation_sign * r3.sign() * r4.sign());
            op.add_entry(row, col, 0.5 * sign * c);
          }
        }
      }
    }
  }
  op.prune(0.0);
  return op;
}

}  // namespace

SparseOperator build_two_body(const TwoBodyTensor& g, const FockBasis& basis) {
  return build_two_body_impl(g, basis, false);
}

SparseOperator add(const SparseOperator& a, const SparseOperator& b) {
  if (!a.basis().same_sector(b.basis())) {
    throw SectorMismatch("adding operators over different sector bases");
  }
  SparseOperator out(a.basis());
  for (const auto& [key, value] : a.entries()) {
    out.add_entry(key.first, key.second, value);
  }
  for (const auto& [key, value] : b.entries()) {
    out.add_entry(key.first, key.second, value);
  }
  out.prune(0.0);
  return out;
}

FockVector apply(const SparseOperator& op, const FockVector& v) {
  const FockBasis& basis = op.basis();
  if (v.num_orbitals() != basis.num_orbitals() ||
      v.num_particles() != basis.num_particles()) {
    throw SectorMismatch("vector sector does not match operator sector");
  }
  FockVector out(basis.num_orbitals(), basis.num_particles());
  for (const auto& [key, value] : op.entries()) {
    const Complex amp = v.amplitude(basis.state(key.second));
    if (amp != Complex(0.0, 0.0)) {
      out.add(basis.state(key.first), value * amp);
    }
  }
  return out;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  if (!a.basis().same_sector(b.basis())) {
    throw SectorMismatch("comparing operators over different sector bases");
  }
  double dev = 0.0;
  for (const auto& [key, value] : a.entries()) {
    dev = std::max(dev, std::abs(value - b.entry(key.first, key.second)));
  }
  for (const auto& [key, value] : b.entries()) {
    dev = std::max(dev, std::abs(value - a.entry(key.first, key.second)));
  }
  return dev;
}

namespace detail {

SparseOperator build_two_body_swapped_annihilators(const TwoBodyTensor& g,
                                                   const FockBasis& basis) {
  return build_two_body_impl(g, basis, true);
}

}  // namespace detail

}  // namespace fockbridge
