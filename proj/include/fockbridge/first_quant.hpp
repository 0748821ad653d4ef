// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// First-quantized N-particle states as dense rank-N coefficient tensors over
// an M-orbital single-particle space, together with the antisymmetrizer and
// the slot-wise action of one- and two-body operators.  This representation
// is exponentially wasteful on purpose: it is the ground truth that the
// occupation-number machinery is checked against.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fockbridge/errors.hpp"
#include "fockbridge/fock.hpp"

namespace fockbridge {

/// Caps for dense tensors: rank (particle number) and total element count.
inline constexpr int kMaxTensorRank = 8;
inline constexpr std::size_t kMaxTensorSize = 10'000'000;

/// An ordered list of N >= 1 occupied 1-based orbitals (P_1, ..., P_N).
/// The list is a labeled product state, so repeats and arbitrary order are
/// representable; the strictly ascending form is the reference ordering.
class ProductState {
 public:
  explicit ProductState(std::vector<int> orbitals);
  ProductState(std::initializer_list<int> orbitals)
      : ProductState(std::vector<int>(orbitals)) {}

  int size() const noexcept { return static_cast<int>(orbitals_.size()); }

  /// 1-based slot access: orbital(i) = P_i for i in [1, N].
  int orbital(int slot) const;

  const std::vector<int>& orbitals() const noexcept { return orbitals_; }

  /// True iff strictly ascending (the reference ordering).
  bool is_reference() const noexcept;

  int max_orbital() const noexcept;

 private:
  std::vector<int> orbitals_;
};

/// Dense rank-N tensor of extent M per slot, row-major with slot 1 slowest.
/// Indices are 0-based internally: entry (i_1, ..., i_N) holds the
/// coefficient of the product basis vector e_{i_1+1} x ... x e_{i_N+1}.
class FirstQuantTensor {
 public:
  FirstQuantTensor(int num_orbitals, int num_particles);

  int num_orbitals() const noexcept { return num_orbitals_; }
  int num_particles() const noexcept { return num_particles_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex& operator[](std::size_t flat) { return coeffs_[flat]; }
  const Complex& operator[](std::size_t flat) const { return coeffs_[flat]; }

  std::size_t flat_index(std::span<const int> indices) const;
  void unflatten(std::size_t flat, std::span<int> indices_out) const;

  Complex at(std::span<const int> indices) const {
    return coeffs_[flat_index(indices)];
  }
  Complex& at(std::span<const int> indices) {
    return coeffs_[flat_index(indices)];
  }
  Complex at(std::initializer_list<int> indices) const {
    return at(std::span<const int>(indices.begin(), indices.size()));
  }
  Complex& at(std::initializer_list<int> indices) {
    return at(std::span<const int>(indices.begin(), indices.size()));
  }

  double norm() const;
  double max_abs() const;

  FirstQuantTensor& operator+=(const FirstQuantTensor& other);
  FirstQuantTensor& operator-=(const FirstQuantTensor& other);
  FirstQuantTensor& operator*=(Complex factor);

 private:
  void check_same_shape(const FirstQuantTensor& other) const;

  int num_orbitals_;
  int num_particles_;
  std::vector<Complex> coeffs_;
};

FirstQuantTensor operator+(FirstQuantTensor a, const FirstQuantTensor& b);
FirstQuantTensor operator-(FirstQuantTensor a, const FirstQuantTensor& b);
FirstQuantTensor operator*(Complex factor, FirstQuantTensor t);

/// Largest entrywise |a - b|.
double max_abs_diff(const FirstQuantTensor& a, const FirstQuantTensor& b);

/// Equality at the shared tolerance 1e-12 * max(1, |a|_max, |b|_max).
bool approx_equal(const FirstQuantTensor& a, const FirstQuantTensor& b);

/// Advances a 0-based multi-index through all M^N values in row-major order.
/// Returns false after the last one.  The all-zero index starts the sweep;
/// rank 0 yields exactly one (empty) index.
bool next_multi_index(std::span<int> indices, int extent);

/// One-body matrix elements f(alpha, beta) = <alpha|f|beta>, 1-based, dense
/// M x M.  Hermiticity is not assumed; spectra demand it separately.
class OneBodyMatrix {
 public:
  explicit OneBodyMatrix(int num_orbitals);

  int num_orbitals() const noexcept { return num_orbitals_; }

  Complex& operator()(int alpha, int beta) {
    return entries_[index(alpha, beta)];
  }
  Complex operator()(int alpha, int beta) const {
    return entries_[index(alpha, beta)];
  }

  static OneBodyMatrix identity(int num_orbitals);

  bool is_hermitian(double tol) const;
  double max_abs() const;

 private:
  std::size_t index(int alpha, int beta) const;

  int num_orbitals_;
  std::vector<Complex> entries_;
};

/// Two-body matrix elements g(alpha, beta, gamma, delta)
/// = <alpha beta|g|gamma delta>, 1-based, dense M^4.  Physical elements obey
/// the exchange symmetry g(alpha, beta, gamma, delta) =
/// g(beta, alpha, delta, gamma); the class stores arbitrary values and
/// offers checks and symmetrization so that loaders can enforce it.
class TwoBodyTensor {
 public:
  explicit TwoBodyTensor(int num_orbitals);

  int num_orbitals() const noexcept { return num_orbitals_; }

  Complex& operator()(int alpha, int beta, int gamma, int delta) {
    return entries_[index(alpha, beta, gamma, delta)];
  }
  Complex operator()(int alpha, int beta, int gamma, int delta) const {
    return entries_[index(alpha, beta, gamma, delta)];
  }

  /// g acting as the identity on every ordered pair.
  static TwoBodyTensor pair_identity(int num_orbitals);

  bool has_exchange_symmetry(double tol) const;

  /// Averages g with its exchange image, the nearest exchange-symmetric
  /// tensor.
  TwoBodyTensor symmetrized() const;

  /// Hermiticity in the pair indices: g(a,b,c,d) = conj(g(c,d,a,b)).
  bool is_hermitian(double tol) const;

  double max_abs() const;

 private:
  std::size_t index(int alpha, int beta, int gamma, int delta) const;

  int num_orbitals_;
  std::vector<Complex> entries_;
};

/// Coefficient tensor of the bare product state |P_1 ... P_N>: a single unit
/// entry at (P_1 - 1, ..., P_N - 1).
FirstQuantTensor product_state_tensor(const ProductState& p, int num_orbitals);

/// The antisymmetrizer P_f: out(i_1,...,i_N) =
/// sum over permutations pi of sign(pi) * t(i_{pi(1)}, ..., i_{pi(N)}).
/// Note P_f P_f = N! P_f; this is the projector scaled by N!.
FirstQuantTensor antisymmetrize(const FirstQuantTensor& t);

/// sqrt(1/N!) * antisymmetrize(product_state_tensor(p)).  Accepts any
/// labeled product state; repeats yield the zero tensor.
FirstQuantTensor antisymmetrized_product_state(const ProductState& p,
                                               int num_orbitals);

/// Normalized N-particle basis state for a reference (strictly ascending)
/// orbital list: sqrt(1/N!) P_f |P_1 ... P_N>.  Rejects non-reference input.
FirstQuantTensor slater_state(const ProductState& p, int num_orbitals);

/// Additive one-body action sum_i f^(i): contracts f into each slot in turn
/// and sums.
FirstQuantTensor apply_one_body(const OneBodyMatrix& f,
                                const FirstQuantTensor& t);

/// Additive pair action sum_{i<l} g^(i,l): contracts g into every unordered
/// slot pair.  Requires N >= 2.
FirstQuantTensor apply_two_body(const TwoBodyTensor& g,
                                const FirstQuantTensor& t);

/// <a|b> over all M^N product basis vectors, conjugating the first argument.
Complex inner_product(const FirstQuantTensor& a, const FirstQuantTensor& b);

/// Sign (+1/-1) of a permutation given as 0-based images, by inversion count.
int permutation_sign(std::span<const int> permutation);

/// n! as a double-exact integer for n <= kMaxTensorRank.
std::uint64_t factorial(int n);

}  // namespace fockbridge
