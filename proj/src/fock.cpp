// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/fock.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fockbridge {

namespace {

void check_num_orbitals(int num_orbitals) {
  if (num_orbitals < 1 || num_orbitals > kMaxOrbitals) {
    throw InvalidDimension("orbital count " + std::to_string(num_orbitals) +
                           " outside [1, " + std::to_string(kMaxOrbitals) +
                           "]");
  }
}

void check_orbital_in_range(OrbitalIndex alpha, int num_orbitals) {
  check_num_orbitals(num_orbitals);
  if (alpha.value() > num_orbitals) {
    throw InvalidOrbital("orbital " + std::to_string(alpha.value()) +
                         " outside [1, " + std::to_string(num_orbitals) + "]");
  }
}

}  // namespace

OccupationState OccupationState::from_orbitals(std::span<const int> orbitals) {
  OccupationState s;
  for (int label : orbitals) {
    OrbitalIndex alpha(label);
    if (s.occupied(alpha)) {
      throw InvalidOrbital("duplicate orbital " + std::to_string(label) +
                           " in occupation list");
    }
    s = s.with_occupied(alpha);
  }
  return s;
}

std::vector<int> OccupationState::occupied_orbitals() const {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(particle_count()));
  std::uint32_t rest = bits_;
  while (rest != 0) {
    int bit = std::countr_zero(rest);
    labels.push_back(bit + 1);
    rest &= rest - 1;
  }
  return labels;
}

std::string OccupationState::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : occupied_orbitals()) {
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

FockVector::FockVector(int num_orbitals, int num_particles)
    : num_orbitals_(num_orbitals), num_particles_(num_particles) {
  check_num_orbitals(num_orbitals);
}

void FockVector::add(OccupationState state, Complex amplitude) {
  if (state.particle_count() != num_particles_) {
    throw SectorMismatch("state " + state.to_string() + " has " +
                         std::to_string(state.particle_count()) +
                         " particles, sector expects " +
                         std::to_string(num_particles_));
  }
  if (num_orbitals_ < kMaxOrbitals &&
      (state.bits() >> num_orbitals_) != 0u) {
    throw SectorMismatch("state " + state.to_string() +
                         " occupies orbitals beyond M = " +
                         std::to_string(num_orbitals_));
  }
  amplitudes_[state] += amplitude;
}

Complex FockVector::amplitude(OccupationState state) const {
  auto it = amplitudes_.find(state);
  return it == amplitudes_.end() ? Complex(0.0, 0.0) : it->second;
}

double FockVector::norm() const {
  double sum = 0.0;
  for (const auto& [state, a] : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

FockVector FockVector::pruned(double eps) const {
  FockVector out(num_orbitals_, num_particles_);
  for (const auto& [state, a] : amplitudes_) {
    if (std::abs(a) > eps) out.add(state, a);
  }
  return out;
}

FockBasis::FockBasis(int num_orbitals, int num_particles)
    : num_orbitals_(num_orbitals), num_particles_(num_particles) {
  check_num_orbitals(num_orbitals);
  if (num_particles < 0 || num_particles > num_orbitals) {
    throw EmptySectorError("sector (M = " + std::to_string(num_orbitals) +
                           ", N = " + std::to_string(num_particles) +
                           ") holds no states");
  }
  states_.reserve(static_cast<std::size_t>(binomial(num_orbitals, num_particles)));
  if (num_particles == 0) {
    states_.push_back(OccupationState());
    return;
  }
  // Gosper's hack: steps through all masks of fixed popcount in ascending
  // numeric order.
  std::uint32_t v = (1u << num_particles) - 1u;
  const std::uint32_t limit = 1u << num_orbitals;
  while (v < limit) {
    states_.push_back(OccupationState::from_bits(v));
    std::uint32_t t = v | (v - 1u);
    v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
  }
}

std::size_t FockBasis::position(OccupationState state) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), state);
  if (it == states_.end() || *it != state) {
    throw SectorMismatch("state " + state.to_string() + " not in sector (M = " +
                         std::to_string(num_orbitals_) + ", N = " +
                         std::to_string(num_particles_) + ")");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

FockVector vacuum(int num_orbitals) {
  FockVector v(num_orbitals, 0);
  v.add(OccupationState(), Complex(1.0, 0.0));
  return v;
}

SignedState apply_creation(OrbitalIndex alpha, OccupationState state,
                           int num_orbitals) {
  check_orbital_in_range(alpha, num_orbitals);
  if (state.occupied(alpha)) return SignedState::zero();
  int k = state.occupied_below(alpha);
  return SignedState(k % 2 == 0 ? 1 : -1, state.with_occupied(alpha));
}

SignedState apply_annihilation(OrbitalIndex alpha, OccupationState state,
                               int num_orbitals) {
  check_orbital_in_range(alpha, num_orbitals);
  if (!state.occupied(alpha)) return SignedState::zero();
  int k = state.occupied_below(alpha);
  return SignedState(k % 2 == 0 ? 1 : -1, state.with_vacant(alpha));
}

namespace {

SignedState apply_single(const LadderOp& op, OccupationState state,
                         int num_orbitals, bool annihilator_parity_above) {
  if (op.kind == LadderOp::Kind::Create) {
    return apply_creation(op.orbital, state, num_orbitals);
  }
  if (annihilator_parity_above) {
    return detail::apply_annihilation_parity_above(op.orbital, state,
                                                   num_orbitals);
  }
  return apply_annihilation(op.orbital, state, num_orbitals);
}

FockVector apply_string_impl(std::span<const LadderOp> ops,
                             const FockVector& v,
                             bool annihilator_parity_above) {
  const int m = v.num_orbitals();
  FockVector current = v;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const int delta = it->kind == LadderOp::Kind::Create ? 1 : -1;
    FockVector next(m, current.num_particles() + delta);
    for (const auto& [state, amplitude] : current.amplitudes()) {
      SignedState r =
          apply_single(*it, state, m, annihilator_parity_above);
      if (!r.is_zero()) {
        next.add(r.state(), static_cast<double>(r.sign()) * amplitude);
      }
    }
    current = std::move(next);
  }
  return current.pruned(0.0);
}

}  // namespace

FockVector apply_ladder_string(std::span<const LadderOp> ops,
                               const FockVector& v) {
  return apply_string_impl(ops, v, false);
}

FockVector apply_ladder_string(std::initializer_list<LadderOp> ops,
                               const FockVector& v) {
  return apply_ladder_string(std::span<const LadderOp>(ops.begin(), ops.size()),
                             v);
}

FockBasis enumerate_basis(int num_orbitals, int num_particles) {
  return FockBasis(num_orbitals, num_particles);
}

Complex inner_product(const FockVector& a, const FockVector& b) {
  if (a.num_orbitals() != b.num_orbitals()) {
    throw SectorMismatch("inner product across different orbital counts");
  }
  if (a.num_particles() != b.num_particles()) return Complex(0.0, 0.0);
  // Iterate the smaller map.
  const FockVector& small = a.term_count() <= b.term_count() ? a : b;
  const FockVector& large = a.term_count() <= b.term_count() ? b : a;
  Complex sum(0.0, 0.0);
  for (const auto& [state, amp] : small.amplitudes()) {
    const Complex other = large.amplitude(state);
    if (&small == &a) {
      sum += std::conj(amp) * other;
    } else {
      sum += std::conj(other) * amp;
    }
  }
  return sum;
}

double max_abs_diff(const FockVector& a, const FockVector& b) {
  if (a.num_orbitals() != b.num_orbitals() ||
      a.num_particles() != b.num_particles()) {
    throw SectorMismatch("comparing vectors from different sectors");
  }
  double dev = 0.0;
  for (const auto& [state, amp] : a.amplitudes()) {
    dev = std::max(dev, std::abs(amp - b.amplitude(state)));
  }
  for (const auto& [state, amp] : b.amplitudes()) {
    dev = std::max(dev, std::abs(amp - a.amplitude(state)));
  }
  return dev;
}

bool exactly_equal(const FockVector& a, const FockVector& b) {
  if (a.num_orbitals() != b.num_orbitals()) return false;
  const FockVector pa = a.pruned(0.0);
  const FockVector pb = b.pruned(0.0);
  if (pa.term_count() == 0 && pb.term_count() == 0) return true;
  return pa.num_particles() == pb.num_particles() &&
         pa.amplitudes() == pb.amplitudes();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int j = 1; j <= k; ++j) {
    result = result * static_cast<std::uint64_t>(n - k + j) /
             static_cast<std::uint64_t>(j);
  }
  return result;
}

namespace detail {

SignedState apply_annihilation_parity_above(OrbitalIndex alpha,
                                            OccupationState state,
                                            int num_orbitals) {
  check_orbital_in_range(alpha, num_orbitals);
  if (!state.occupied(alpha)) return SignedState::zero();
  int k = state.occupied_above(alpha);
  return SignedState(k % 2 == 0 ? 1 : -1, state.with_vacant(alpha));
}

FockVector apply_ladder_string_parity_above(std::span<const LadderOp> ops,
                                            const FockVector& v) {
  return apply_string_impl(ops, v, true);
}

}  // namespace detail

}  // namespace fockbridge
