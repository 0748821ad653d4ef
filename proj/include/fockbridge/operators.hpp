// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sparse matrices of one- and two-body operators on a fixed particle-number
// sector of Fock space.  The one-body operator is
//   F1 = sum_{alpha,beta} f(alpha,beta) adag_alpha a_beta,
// the two-body operator is
//   F2 = (1/2) sum_{alpha,beta,gamma,delta} g(alpha,beta,gamma,delta)
//            adag_alpha adag_beta a_delta a_gamma.
// The annihilator order in F2 (a_delta a_gamma, with a_gamma acting first)
// is load-bearing: swapping it negates every gamma != delta term.

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>

#include "fockbridge/errors.hpp"
#include "fockbridge/first_quant.hpp"
#include "fockbridge/fock.hpp"

namespace fockbridge {

/// Sparse complex matrix over the basis of one (M, N) sector.  Entries are
/// keyed (row, col) by basis position; finalized builders store no zeros.
class SparseOperator {
 public:
  explicit SparseOperator(FockBasis basis) : basis_(std::move(basis)) {}

  const FockBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// Accumulates a value onto one entry.
  void add_entry(std::size_t row, std::size_t col, Complex value);

  /// Entry value (0 if absent).
  Complex entry(std::size_t row, std::size_t col) const;

  const std::map<std::pair<std::size_t, std::size_t>, Complex>& entries()
      const noexcept {
    return entries_;
  }

  std::size_t entry_count() const noexcept { return entries_.size(); }

  /// Drops stored entries with |value| <= eps.
  void prune(double eps = 0.0);

  bool is_hermitian(double tol) const;

  double max_abs() const;

 private:
  FockBasis basis_;
  std::map<std::pair<std::size_t, std::size_t>, Complex> entries_;
};

/// Assembles F1 on the sector of the given basis, column by column: only
/// the states reachable by one annihilation plus one creation contribute,
/// with the exact ladder signs.
SparseOperator build_one_body(const OneBodyMatrix& f, const FockBasis& basis);

/// Assembles F2 on the sector of the given basis.  The matrix elements must
/// carry the pair-exchange symmetry g(a,b,c,d) = g(b,a,d,c); violations are
/// rejected.  Terms with gamma = delta or alpha = beta vanish identically
/// and are skipped.
SparseOperator build_two_body(const TwoBodyTensor& g, const FockBasis& basis);

/// Entrywise sum of two operators over the same sector basis.
SparseOperator add(const SparseOperator& a, const SparseOperator& b);

/// Matrix-vector product.  The vector must live in the operator's sector.
FockVector apply(const SparseOperator& op, const FockVector& v);

/// Largest entrywise |a - b| over the union of stored entries.
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

namespace detail {

/// F2 assembled with the annihilators in the wrong order
/// (adag adag a_gamma a_delta).  Every gamma != delta contribution flips
/// sign, so the result is the exact negative of build_two_body.  Exists as a
/// fault-injection hook for negative-control tests.
SparseOperator build_two_body_swapped_annihilators(const TwoBodyTensor& g,
                                                   const FockBasis& basis);

}  // namespace detail

}  // namespace fockbridge
