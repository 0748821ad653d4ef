// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Occupation-number states for identical fermions and the exact action of
// creation/annihilation operators on them.  States over M orbitals are
// bitmasks: bit alpha-1 is set iff orbital alpha is occupied, so a state
// doubles as its own canonical ordering and every operator sign reduces to a
// popcount.

#pragma once

#include <bit>
#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fockbridge/errors.hpp"

namespace fockbridge {

using Complex = std::complex<double>;

/// Hard cap on the orbital count M.  Keeps bitmasks inside 32 bits and all
/// full-space sweeps at desk scale.
inline constexpr int kMaxOrbitals = 24;

/// 1-based orbital label alpha in [1, kMaxOrbitals].  Construction validates
/// the global range; the ambient M of a given problem is checked at the point
/// of use.
class OrbitalIndex {
 public:
  explicit OrbitalIndex(int value) : value_(value) {
    if (value < 1 || value > kMaxOrbitals) {
      throw InvalidOrbital("orbital index " + std::to_string(value) +
                           " outside [1, " + std::to_string(kMaxOrbitals) +
                           "]");
    }
  }

  int value() const noexcept { return value_; }
  /// 0-based bit position inside an occupation bitmask.
  int bit() const noexcept { return value_ - 1; }

  auto operator<=>(const OrbitalIndex&) const = default;

 private:
  int value_;
};

/// One basis state |N_1 ... N_M> with N_alpha in {0, 1}.
class OccupationState {
 public:
  constexpr OccupationState() = default;

  static OccupationState from_bits(std::uint32_t bits) {
    OccupationState s;
    s.bits_ = bits;
    return s;
  }

  /// Builds the state occupying exactly the given 1-based orbitals.
  /// Duplicate labels are rejected: a fermionic state cannot hold them.
  static OccupationState from_orbitals(std::span<const int> orbitals);
  static OccupationState from_orbitals(std::initializer_list<int> orbitals) {
    return from_orbitals(std::span<const int>(orbitals.begin(), orbitals.size()));
  }

  std::uint32_t bits() const noexcept { return bits_; }

  bool occupied(OrbitalIndex alpha) const noexcept {
    return (bits_ >> alpha.bit()) & 1u;
  }

  /// Total particle number N.
  int particle_count() const noexcept { return std::popcount(bits_); }

  /// Number of occupied orbitals with label strictly below alpha.  This is
  /// the exponent of the fermionic sign picked up when an operator for
  /// orbital alpha is commuted past the occupied orbitals in front of it.
  int occupied_below(OrbitalIndex alpha) const noexcept {
    return std::popcount(bits_ & ((1u << alpha.bit()) - 1u));
  }

  /// Number of occupied orbitals with label strictly above alpha.
  int occupied_above(OrbitalIndex alpha) const noexcept {
    return std::popcount(bits_ >> alpha.value());
  }

  OccupationState with_occupied(OrbitalIndex alpha) const noexcept {
    return from_bits(bits_ | (1u << alpha.bit()));
  }

  OccupationState with_vacant(OrbitalIndex alpha) const noexcept {
    return from_bits(bits_ & ~(1u << alpha.bit()));
  }

  /// Ascending list of occupied 1-based orbital labels.
  std::vector<int> occupied_orbitals() const;

  /// Renders "{1,3,4}" ("{}" for the vacuum).
  std::string to_string() const;

  auto operator<=>(const OccupationState&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Result of a single ladder operator acting on a basis state: either a
/// signed basis state or the distinguished zero vector.  ZERO is not a
/// (sign, state) pair; querying its sign or state is a logic error.
class SignedState {
 public:
  SignedState(int sign, OccupationState state) : sign_(sign), state_(state) {
    if (sign != 1 && sign != -1) {
      throw Error("SignedState sign must be +1 or -1");
    }
  }

  static SignedState zero() noexcept { return SignedState(); }

  bool is_zero() const noexcept { return sign_ == 0; }

  int sign() const {
    if (is_zero()) throw Error("sign() called on the zero result");
    return sign_;
  }

  OccupationState state() const {
    if (is_zero()) throw Error("state() called on the zero result");
    return state_;
  }

  bool operator==(const SignedState&) const = default;

 private:
  SignedState() = default;

  int sign_ = 0;  // 0 encodes ZERO internally; never exposed
  OccupationState state_;
};

/// Sparse vector in the sector of M orbitals and N particles.  Keys are
/// basis states with popcount N; amplitudes are complex.  A sector with N
/// outside [0, M] is permitted as a formal zero space (no state can be
/// added to it), which keeps ladder-string bookkeeping total.
class FockVector {
 public:
  FockVector(int num_orbitals, int num_particles);

  int num_orbitals() const noexcept { return num_orbitals_; }
  int num_particles() const noexcept { return num_particles_; }

  /// Accumulates amplitude onto a basis state of this sector.
  void add(OccupationState state, Complex amplitude);

  /// Amplitude of a basis state (0 if absent).
  Complex amplitude(OccupationState state) const;

  const std::map<OccupationState, Complex>& amplitudes() const noexcept {
    return amplitudes_;
  }

  std::size_t term_count() const noexcept { return amplitudes_.size(); }

  double norm() const;

  /// Drops stored amplitudes with |a| <= eps.  Semantics-preserving.
  FockVector pruned(double eps = 0.0) const;

 private:
  int num_orbitals_;
  int num_particles_;
  std::map<OccupationState, Complex> amplitudes_;
};

/// All C(M, N) basis states of a sector, in ascending bitmask order.
class FockBasis {
 public:
  FockBasis(int num_orbitals, int num_particles);

  int num_orbitals() const noexcept { return num_orbitals_; }
  int num_particles() const noexcept { return num_particles_; }
  std::size_t size() const noexcept { return states_.size(); }

  OccupationState state(std::size_t position) const { return states_.at(position); }

  /// Position of a state in the ascending order; the state must belong to
  /// the sector.
  std::size_t position(OccupationState state) const;

  const std::vector<OccupationState>& states() const noexcept { return states_; }

  bool same_sector(const FockBasis& other) const noexcept {
    return num_orbitals_ == other.num_orbitals_ &&
           num_particles_ == other.num_particles_;
  }

 private:
  int num_orbitals_;
  int num_particles_;
  std::vector<OccupationState> states_;
};

/// One creation or annihilation operator a^dagger_alpha / a_alpha.
struct LadderOp {
  enum class Kind { Create, Annihilate };
  Kind kind;
  OrbitalIndex orbital;
};

inline LadderOp create(int orbital) {
  return LadderOp{LadderOp::Kind::Create, OrbitalIndex(orbital)};
}

inline LadderOp annihilate(int orbital) {
  return LadderOp{LadderOp::Kind::Annihilate, OrbitalIndex(orbital)};
}

/// The vacuum |0> of M orbitals: unit amplitude on the empty state.
FockVector vacuum(int num_orbitals);

/// a^dagger_alpha |s>.  Occupied target orbital gives ZERO; otherwise the
/// sign is (-1)^k with k the number of occupied orbitals strictly below
/// alpha.  With this convention an ascending product of creators applied to
/// the vacuum produces its target state with sign +1.
SignedState apply_creation(OrbitalIndex alpha, OccupationState state,
                           int num_orbitals);

/// a_alpha |s>.  Empty target orbital gives ZERO; otherwise the sign matches
/// apply_creation so that the two operators are exact matrix transposes of
/// each other (adjoints, since every matrix element is real).
SignedState apply_annihilation(OrbitalIndex alpha, OccupationState state,
                               int num_orbitals);

/// Applies a product of ladder operators to a vector, rightmost operator
/// first: ops = {A, B, C} computes A(B(C(v))).  Extends linearly over the
/// amplitudes; the result lives in the sector with
/// N' = N + #creations - #annihilations.
FockVector apply_ladder_string(std::span<const LadderOp> ops,
                               const FockVector& v);
FockVector apply_ladder_string(std::initializer_list<LadderOp> ops,
                               const FockVector& v);

/// All basis states of the (M, N) sector in ascending bitmask order.
/// N < 0 or N > M is an empty sector and is rejected.
FockBasis enumerate_basis(int num_orbitals, int num_particles);

/// <a|b> with the convention of conjugating the first argument.
Complex inner_product(const FockVector& a, const FockVector& b);

/// Largest |a_s - b_s| over the union of stored states.
double max_abs_diff(const FockVector& a, const FockVector& b);

/// True iff the two vectors hold identical amplitude maps after dropping
/// exact zeros.  Meaningful when amplitudes are exactly representable
/// (integer-valued ladder-string results).
bool exactly_equal(const FockVector& a, const FockVector& b);

/// C(n, k) for n <= kMaxOrbitals.
std::uint64_t binomial(int n, int k);

namespace detail {

/// Deliberately corrupted annihilator: counts occupied orbitals strictly
/// above alpha instead of below, while creators keep the standard
/// below-count.  The resulting pair of maps no longer represents adjoint
/// operators.  Exists only as a fault-injection hook for negative-control
/// tests; never used by the production paths.
SignedState apply_annihilation_parity_above(OrbitalIndex alpha,
                                            OccupationState state,
                                            int num_orbitals);

/// apply_ladder_string with the corrupted annihilator above.
FockVector apply_ladder_string_parity_above(std::span<const LadderOp> ops,
                                            const FockVector& v);

}  // namespace detail

}  // namespace fockbridge
