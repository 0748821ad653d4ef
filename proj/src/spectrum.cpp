// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/spectrum.hpp"

#include <Eigen/Dense>

#include "fockbridge/equivalence.hpp"

namespace fockbridge {

std::string to_string(Representation rep) {
  return rep == Representation::FirstQuantized ? "first" : "second";
}

namespace {

void check_capacity(int num_orbitals, int num_particles) {
  const std::uint64_t dim = binomial(num_orbitals, num_particles);
  if (dim > kMaxSpectrumDim) {
    throw CapacityError("sector dimension " + std::to_string(dim) +
                        " above diagonalization cap " +
                        std::to_string(kMaxSpectrumDim));
  }
}

void check_hermitian(const ModelFile& model) {
  if (!model.one_body.is_hermitian(1e-12)) {
    throw HermiticityError("one-body coefficients are not hermitian");
  }
  if (!model.two_body.is_hermitian(1e-12)) {
    throw HermiticityError(
        "two-body coefficients are not hermitian in the pair indices");
  }
}

std::vector<double> ascending_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigensolver failed to converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  return std::vector<double>(values.data(), values.data() + values.size());
}

/// Sector matrix through the occupation-number representation.
Eigen::MatrixXcd second_quantized_matrix(const ModelFile& model,
                                         const FockBasis& basis) {
  const SparseOperator h = build_hamiltonian(model, basis);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(basis.size()),
      static_cast<Eigen::Index>(basis.size()));
  for (const auto& [key, value] : h.entries()) {
    dense(static_cast<Eigen::Index>(key.first),
          static_cast<Eigen::Index>(key.second)) = value;
  }
  return dense;
}

/// Sector matrix through the first-quantized representation: matrix elements
/// of the slot-wise operator action between normalized antisymmetric basis
/// tensors.  No occupation-number operator assembly is involved.
Eigen::MatrixXcd first_quantized_matrix(const ModelFile& model,
                                        const FockBasis& basis) {
  const int m = basis.num_orbitals();
  const int n = basis.num_particles();
  std::vector<FirstQuantTensor> slaters;
  slaters.reserve(basis.size());
  for (const OccupationState& state : basis.states()) {
    slaters.push_back(slater_state(ProductState(state.occupied_orbitals()), m));
  }

  Eigen::MatrixXcd dense(static_cast<Eigen::Index>(basis.size()),
                         static_cast<Eigen::Index>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    FirstQuantTensor h_psi = apply_one_body(model.one_body, slaters[col]);
    if (n >= 2) {
      h_psi += apply_two_body(model.two_body, slaters[col]);
    }
    for (std::size_t row = 0; row < basis.size(); ++row) {
      dense(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          inner_product(slaters[row], h_psi);
    }
  }
  return dense;
}

}  // namespace

SparseOperator build_hamiltonian(const ModelFile& model,
                                 const FockBasis& basis) {
  SparseOperator h = build_one_body(model.one_body, basis);
  if (basis.num_particles() >= 2) {
    h = add(h, build_two_body(model.two_body, basis));
  }
  return h;
}

SpectrumResult compute_spectrum(const ModelFile& model, int num_particles,
                                Representation rep) {
  check_hermitian(model);
  check_capacity(model.num_orbitals, num_particles);
  const FockBasis basis(model.num_orbitals, num_particles);

  SpectrumResult result;
  result.num_orbitals = model.num_orbitals;
  result.num_particles = num_particles;
  result.representation = rep;

  if (num_particles == 0) {
    // H annihilates the vacuum: both representations give the single
    // eigenvalue 0 without any numerics.
    result.eigenvalues = {0.0};
    return result;
  }

  const Eigen::MatrixXcd h = rep == Representation::FirstQuantized
                                 ? first_quantized_matrix(model, basis)
                                 : second_quantized_matrix(model, basis);
  result.eigenvalues = ascending_eigenvalues(h);
  return result;
}

}  // namespace fockbridge
