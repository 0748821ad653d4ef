// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fockbridge {

std::string to_string(Fault fault) {
  switch (fault) {
    case Fault::TwoBodyAnnihilatorOrder:
      return "two-body-order";
    case Fault::LadderSignMismatch:
      return "ladder-signs";
    case Fault::None:
      break;
  }
  return "none";
}

bool EquivalenceReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void EquivalenceReport::merge(const EquivalenceReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

/// Max over all index pairs of |t(idx) + t(idx with slots j,k swapped)|;
/// zero for a perfectly antisymmetric tensor.
double antisymmetry_defect(const FirstQuantTensor& t) {
  const int n = t.num_particles();
  if (n < 2) return 0.0;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> swapped(static_cast<std::size_t>(n), 0);
  double defect = 0.0;
  do {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::copy(idx.begin(), idx.end(), swapped.begin());
        std::swap(swapped[static_cast<std::size_t>(j)],
                  swapped[static_cast<std::size_t>(k)]);
        defect = std::max(defect, std::abs(t.at(idx) + t.at(swapped)));
      }
    }
  } while (next_multi_index(idx, t.num_orbitals()));
  return defect;
}

std::string sector_tag(int m, int n) {
  return "(M=" + std::to_string(m) + ",N=" + std::to_string(n) + ")";
}

std::vector<LadderOp> creator_string(const std::vector<int>& orbitals) {
  std::vector<LadderOp> ops;
  ops.reserve(orbitals.size());
  for (int label : orbitals) ops.push_back(create(label));
  return ops;
}

FockVector apply_string(const std::vector<LadderOp>& ops, const FockVector& v,
                        Fault fault) {
  if (fault == Fault::LadderSignMismatch) {
    return detail::apply_ladder_string_parity_above(ops, v);
  }
  return apply_ladder_string(ops, v);
}

}  // namespace

FockVector to_fock(const FirstQuantTensor& t) {
  const int m = t.num_orbitals();
  const int n = t.num_particles();
  const double scale = std::max(1.0, t.max_abs());
  const double defect = antisymmetry_defect(t);
  if (defect > kEquivalenceTolerance * scale) {
    std::ostringstream msg;
    msg << "tensor is not antisymmetric: defect " << defect
        << " exceeds tolerance";
    throw NotAntisymmetricError(msg.str());
  }

  const double root_nfact = std::sqrt(static_cast<double>(factorial(n)));
  FockVector out(m, n);
  const FockBasis basis(m, n);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (const OccupationState& state : basis.states()) {
    const std::vector<int> occ = state.occupied_orbitals();
    for (int slot = 0; slot < n; ++slot) {
      idx[static_cast<std::size_t>(slot)] =
          occ[static_cast<std::size_t>(slot)] - 1;
    }
    const Complex amp = root_nfact * t.at(idx);
    if (amp != Complex(0.0, 0.0)) out.add(state, amp);
  }
  return out;
}

FirstQuantTensor from_fock(const FockVector& v) {
  const int m = v.num_orbitals();
  const int n = v.num_particles();
  if (n < 0 || n > m) {
    // Formal zero sector: the only vector there is zero, which the rank-0
    // caller cannot represent.  Reject rather than guess a rank.
    throw EmptySectorError("cannot lift a vector from the empty sector " +
                           sector_tag(m, n));
  }
  FirstQuantTensor out(m, n);
  const double inv_root_nfact =
      1.0 / std::sqrt(static_cast<double>(factorial(n)));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (const auto& [state, amplitude] : v.amplitudes()) {
    const std::vector<int> occ = state.occupied_orbitals();
    const Complex base = inv_root_nfact * amplitude;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int slot = 0; slot < n; ++slot) {
        idx[static_cast<std::size_t>(slot)] =
            occ[static_cast<std::size_t>(perm[static_cast<std::size_t>(slot)])] -
            1;
      }
      out.at(idx) = static_cast<double>(permutation_sign(perm)) * base;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

EquivalenceReport check_one_body_equivalence(const OneBodyMatrix& f,
                                             const ProductState& p) {
  const int m = f.num_orbitals();
  const FirstQuantTensor psi = slater_state(p, m);
  const FockVector lhs = to_fock(apply_one_body(f, psi));
  const FockBasis basis(m, p.size());
  const FockVector rhs = apply(build_one_body(f, basis), to_fock(psi));
  const double dev = max_abs_diff(lhs, rhs);

  EquivalenceReport report;
  CheckResult result;
  result.name = "one_body_equivalence" + sector_tag(m, p.size());
  result.max_deviation = dev;
  result.pass = dev <= kEquivalenceTolerance;
  report.add(std::move(result));
  return report;
}

EquivalenceReport check_two_body_equivalence(const TwoBodyTensor& g,
                                             const ProductState& p,
                                             Fault fault) {
  const int m = g.num_orbitals();
  const FirstQuantTensor psi = slater_state(p, m);
  const FockVector lhs = to_fock(apply_two_body(g, psi));
  const FockBasis basis(m, p.size());
  const SparseOperator f2 =
      fault == Fault::TwoBodyAnnihilatorOrder
          ? detail::build_two_body_swapped_annihilators(g, basis)
          : build_two_body(g, basis);
  const FockVector rhs = apply(f2, to_fock(psi));
  const double dev = max_abs_diff(lhs, rhs);

  EquivalenceReport report;
  CheckResult result;
  result.name = "two_body_equivalence" + sector_tag(m, p.size());
  result.max_deviation = dev;
  result.pass = dev <= kEquivalenceTolerance;
  report.add(std::move(result));
  return report;
}

bool check_single_substitution_identity(const ProductState& p, int slot,
                                        OrbitalIndex q, int num_orbitals,
                                        Fault fault) {
  if (!p.is_reference()) {
    throw ReferenceOrderError(
        "substitution identities take the reference (ascending) orbital list");
  }
  const int n = p.size();
  if (slot < 1 || slot > n) {
    throw InvalidOrbital("slot " + std::to_string(slot) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  const FockVector vac = vacuum(num_orbitals);

  std::vector<int> replaced = p.orbitals();
  replaced[static_cast<std::size_t>(slot - 1)] = q.value();
  const FockVector lhs = apply_string(creator_string(replaced), vac, fault);

  std::vector<LadderOp> rhs_ops;
  rhs_ops.push_back(create(q.value()));
  rhs_ops.push_back(annihilate(p.orbital(slot)));
  for (int label : p.orbitals()) rhs_ops.push_back(create(label));
  const FockVector rhs = apply_string(rhs_ops, vac, fault);

  return exactly_equal(lhs, rhs);
}

bool check_pair_substitution_identity(const ProductState& p, int slot_i,
                                      int slot_l, OrbitalIndex q_i,
                                      OrbitalIndex q_l, int num_orbitals,
                                      Fault fault) {
  if (!p.is_reference()) {
    throw ReferenceOrderError(
        "substitution identities take the reference (ascending) orbital list");
  }
  const int n = p.size();
  if (slot_i < 1 || slot_i > n || slot_l < 1 || slot_l > n) {
    throw InvalidOrbital("slots (" + std::to_string(slot_i) + ", " +
                         std::to_string(slot_l) + ") outside [1, " +
                         std::to_string(n) + "]");
  }
  if (slot_i >= slot_l) {
    throw SlotOrderError("slot i = " + std::to_string(slot_i) +
                         " must precede slot l = " + std::to_string(slot_l));
  }
  const FockVector vac = vacuum(num_orbitals);

  std::vector<int> replaced = p.orbitals();
  replaced[static_cast<std::size_t>(slot_i - 1)] = q_i.value();
  replaced[static_cast<std::size_t>(slot_l - 1)] = q_l.value();
  const FockVector lhs = apply_string(creator_string(replaced), vac, fault);

  // adag_{q_i} adag_{q_l} a_{p_l} a_{p_i} acting on the full reference
  // string; a_{p_i} is rightmost and acts first.
  std::vector<LadderOp> rhs_ops;
  rhs_ops.push_back(create(q_i.value()));
  rhs_ops.push_back(create(q_l.value()));
  rhs_ops.push_back(annihilate(p.orbital(slot_l)));
  rhs_ops.push_back(annihilate(p.orbital(slot_i)));
  for (int label : p.orbitals()) rhs_ops.push_back(create(label));
  const FockVector rhs = apply_string(rhs_ops, vac, fault);

  return exactly_equal(lhs, rhs);
}

double permuted_correspondence_deviation(const ProductState& p,
                                         int num_orbitals) {
  // Integer route: sqrt factors cancel between the two constructions, so
  // compare the raw antisymmetrized tensor (integer entries) against the
  // ladder amplitudes (signed units) without any normalization in between.
  const FirstQuantTensor raw =
      antisymmetrize(product_state_tensor(p, num_orbitals));
  const FockVector string_state =
      apply_ladder_string(creator_string(p.orbitals()), vacuum(num_orbitals));

  const int n = p.size();
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> sorted(static_cast<std::size_t>(n));
  std::vector<int> orbitals(static_cast<std::size_t>(n));
  double dev = 0.0;
  do {
    // Expected entry: zero when an index repeats, otherwise the string
    // amplitude of the ascending rearrangement times the sign of the sort.
    // Covers every entry of the tensor, including N > M, where both sides
    // vanish identically.
    std::copy(idx.begin(), idx.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    Complex expected(0.0, 0.0);
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      int inversions = 0;
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (idx[static_cast<std::size_t>(j)] >
              idx[static_cast<std::size_t>(k)]) {
            ++inversions;
          }
        }
      }
      for (std::size_t slot = 0; slot < sorted.size(); ++slot) {
        orbitals[slot] = sorted[slot] + 1;
      }
      const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
      expected = sign * string_state.amplitude(
                            OccupationState::from_orbitals(orbitals));
    }
    dev = std::max(dev, std::abs(raw.at(idx) - expected));
  } while (next_multi_index(idx, num_orbitals));
  return dev;
}

}  // namespace fockbridge
