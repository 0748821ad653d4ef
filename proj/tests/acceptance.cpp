// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate for the library: every shipped guarantee is exercised end
// to end, one criterion per line, with tolerances and time budgets pinned
// here.  Exits 0 only when every criterion passes.  Oracles are built from
// scratch in this file where independence matters (ladder tabulations, dense
// integer matrix products, slot-wise contraction sums), so a defect in the
// library cannot hide by being used on both sides of a comparison.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fockbridge/equivalence.hpp"
#include "fockbridge/first_quant.hpp"
#include "fockbridge/fock.hpp"
#include "fockbridge/operators.hpp"
#include "fockbridge/random_inputs.hpp"
#include "fockbridge/spectrum.hpp"

namespace {

using namespace fockbridge;

constexpr double kAmplitudeTolerance = 1e-12;
constexpr double kSpectrumAgreementTolerance = 1e-10;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string scientific(double value) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << value;
  return out.str();
}

// --- criterion 1: canonical anticommutation relations -----------------------

/// Action of one ladder operator on every one of the 2^M occupation states:
/// target[s] is the image (-1 when the state is annihilated), sign[s] the
/// sign.  Tabulated one state at a time through the public API.
struct LadderTable {
  std::vector<int> target;
  std::vector<int> sign;
};

LadderTable tabulate(bool is_creation, int alpha, int m) {
  const int dim = 1 << m;
  LadderTable table{std::vector<int>(static_cast<std::size_t>(dim), -1),
                    std::vector<int>(static_cast<std::size_t>(dim), 0)};
  for (int s = 0; s < dim; ++s) {
    const OccupationState state =
        OccupationState::from_bits(static_cast<std::uint32_t>(s));
    const SignedState r = is_creation
                              ? apply_creation(OrbitalIndex(alpha), state, m)
                              : apply_annihilation(OrbitalIndex(alpha), state, m);
    if (!r.is_zero()) {
      table.target[static_cast<std::size_t>(s)] =
          static_cast<int>(r.state().bits());
      table.sign[static_cast<std::size_t>(s)] = r.sign();
    }
  }
  return table;
}

/// Largest integer deviation of {X, Y} from delta * identity, composing the
/// two tabulated actions column by column.
int anticommutator_deviation(const LadderTable& x, const LadderTable& y,
                             int delta, int dim) {
  int worst = 0;
  for (int s = 0; s < dim; ++s) {
    // The anticommutator applied to basis state s yields at most two terms;
    // collect them per row and compare with delta * identity.
    int rows[2] = {-1, -1};
    int values[2] = {0, 0};
    const auto add_product = [&](const LadderTable& second,
                                 const LadderTable& first) {
      const int t = first.target[static_cast<std::size_t>(s)];
      if (t < 0) return;
      const int u = second.target[static_cast<std::size_t>(t)];
      if (u < 0) return;
      const int value = first.sign[static_cast<std::size_t>(s)] *
                        second.sign[static_cast<std::size_t>(t)];
      if (rows[0] < 0 || rows[0] == u) {
        rows[0] = u;
        values[0] += value;
      } else if (rows[1] < 0 || rows[1] == u) {
        rows[1] = u;
        values[1] += value;
      }
    };
    add_product(x, y);
    add_product(y, x);
    bool diagonal_seen = false;
    for (int k = 0; k < 2; ++k) {
      if (rows[k] < 0) continue;
      const int expected = rows[k] == s ? delta : 0;
      if (rows[k] == s) diagonal_seen = true;
      worst = std::max(worst, std::abs(values[k] - expected));
    }
    if (!diagonal_seen) worst = std::max(worst, std::abs(delta));
  }
  return worst;
}

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix dense_matrix(const LadderTable& table, int dim) {
  IntMatrix mat(static_cast<std::size_t>(dim),
                std::vector<int>(static_cast<std::size_t>(dim), 0));
  for (int col = 0; col < dim; ++col) {
    const int row = table.target[static_cast<std::size_t>(col)];
    if (row >= 0) {
      mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          table.sign[static_cast<std::size_t>(col)];
    }
  }
  return mat;
}

int dense_anticommutator_deviation(const IntMatrix& x, const IntMatrix& y,
                                   int delta) {
  const std::size_t dim = x.size();
  int worst = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      int sum = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        sum += x[r][k] * y[k][c] + y[r][k] * x[k][c];
      }
      const int expected = r == c ? delta : 0;
      worst = std::max(worst, std::abs(sum - expected));
    }
  }
  return worst;
}

Outcome criterion_anticommutators() {
  int worst = 0;
  for (int m = 1; m <= 8; ++m) {
    const int dim = 1 << m;
    std::vector<LadderTable> creators;
    std::vector<LadderTable> annihilators;
    for (int alpha = 1; alpha <= m; ++alpha) {
      creators.push_back(tabulate(true, alpha, m));
      annihilators.push_back(tabulate(false, alpha, m));
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const std::size_t au = static_cast<std::size_t>(a);
        const std::size_t bu = static_cast<std::size_t>(b);
        worst = std::max(worst,
                         anticommutator_deviation(annihilators[au],
                                                  annihilators[bu], 0, dim));
        worst = std::max(worst, anticommutator_deviation(creators[au],
                                                         creators[bu], 0, dim));
        worst = std::max(worst,
                         anticommutator_deviation(annihilators[au],
                                                  creators[bu],
                                                  a == b ? 1 : 0, dim));
      }
    }
    // Independent route for small M: full dense integer matrix products.
    if (m <= 4) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          const IntMatrix ca =
              dense_matrix(creators[static_cast<std::size_t>(a)], dim);
          const IntMatrix cb =
              dense_matrix(creators[static_cast<std::size_t>(b)], dim);
          const IntMatrix aa =
              dense_matrix(annihilators[static_cast<std::size_t>(a)], dim);
          const IntMatrix ab =
              dense_matrix(annihilators[static_cast<std::size_t>(b)], dim);
          worst = std::max(worst, dense_anticommutator_deviation(aa, ab, 0));
          worst = std::max(worst, dense_anticommutator_deviation(ca, cb, 0));
          worst = std::max(worst, dense_anticommutator_deviation(
                                      aa, cb, a == b ? 1 : 0));
        }
      }
    }
  }
  return {worst == 0,
          "max integer deviation " + std::to_string(worst) +
              " over all operator pairs, M=1..8, dense cross-check M<=4"};
}

// --- criterion 2: slot-wise one-body action on the worked pair example ------

Outcome criterion_one_body_contraction_oracle() {
  const int m = 3;
  Rng rng(11002);
  double worst = 0.0;
  int cases = 0;
  const FockBasis basis(m, 2);
  for (const OccupationState& state : basis.states()) {
    const std::vector<int> p = state.occupied_orbitals();
    for (int trial = 0; trial < 10; ++trial) {
      const OneBodyMatrix f = random_one_body(m, rng);
      // Oracle: act on each unsymmetrized slot separately, antisymmetrize the
      // two contractions, and normalize.  Shares no code with apply_one_body.
      FirstQuantTensor slot1(m, 2);
      FirstQuantTensor slot2(m, 2);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (b == p[1] - 1) slot1.at({a, b}) = f(a + 1, p[0]);
          if (a == p[0] - 1) slot2.at({a, b}) = f(b + 1, p[1]);
        }
      }
      const FirstQuantTensor oracle =
          Complex(1.0 / std::sqrt(2.0), 0.0) *
          (antisymmetrize(slot1) + antisymmetrize(slot2));
      const FirstQuantTensor actual =
          apply_one_body(f, slater_state(ProductState(p), m));
      worst = std::max(worst, max_abs_diff(actual, oracle));
      ++cases;
    }
  }
  return {worst <= kAmplitudeTolerance,
          "max amplitude deviation " + scientific(worst) + " over " +
              std::to_string(cases) + " cases (M=3, N=2)"};
}

// --- criteria 3 and 4: representation agreement on every small sector -------

Outcome criterion_one_body_equivalence() {
  Rng rng(11003);
  double worst = 0.0;
  int cases = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= m; ++n) {
      const FockBasis basis(m, n);
      for (int trial = 0; trial < 100; ++trial) {
        const OneBodyMatrix f = random_one_body(m, rng);
        for (const OccupationState& state : basis.states()) {
          const EquivalenceReport report = check_one_body_equivalence(
              f, ProductState(state.occupied_orbitals()));
          worst = std::max(worst, report.checks.front().max_deviation);
          ++cases;
        }
      }
    }
  }
  return {worst <= kAmplitudeTolerance,
          "max amplitude deviation " + scientific(worst) + " over " +
              std::to_string(cases) + " comparisons, all sectors M<=4"};
}

Outcome criterion_two_body_equivalence() {
  Rng rng(11004);
  double worst = 0.0;
  int cases = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= m; ++n) {
      const FockBasis basis(m, n);
      for (int trial = 0; trial < 100; ++trial) {
        const TwoBodyTensor g = random_exchange_symmetric_two_body(m, rng);
        for (const OccupationState& state : basis.states()) {
          const EquivalenceReport report = check_two_body_equivalence(
              g, ProductState(state.occupied_orbitals()));
          worst = std::max(worst, report.checks.front().max_deviation);
          ++cases;
        }
      }
    }
  }
  return {worst <= kAmplitudeTolerance,
          "max amplitude deviation " + scientific(worst) + " over " +
              std::to_string(cases) + " comparisons, all sectors M<=4"};
}

// --- criterion 5: substitution identities, exhaustively ----------------------

Outcome criterion_substitution_identities() {
  int failures = 0;
  int cases = 0;
  {
    const int m = 5;
    const FockBasis basis(m, 3);
    for (const OccupationState& state : basis.states()) {
      const ProductState p(state.occupied_orbitals());
      for (int slot = 1; slot <= 3; ++slot) {
        for (int q = 1; q <= m; ++q) {
          if (!check_single_substitution_identity(p, slot, OrbitalIndex(q), m)) {
            ++failures;
          }
          ++cases;
        }
      }
    }
  }
  for (const int m : {5, 6}) {
    const FockBasis basis(m, 3);
    for (const OccupationState& state : basis.states()) {
      const ProductState p(state.occupied_orbitals());
      for (int slot_i = 1; slot_i <= 3; ++slot_i) {
        for (int slot_l = slot_i + 1; slot_l <= 3; ++slot_l) {
          for (int qi = 1; qi <= m; ++qi) {
            for (int ql = 1; ql <= m; ++ql) {
              if (!check_pair_substitution_identity(p, slot_i, slot_l,
                                                    OrbitalIndex(qi),
                                                    OrbitalIndex(ql), m)) {
                ++failures;
              }
              ++cases;
            }
          }
        }
      }
    }
  }
  return {failures == 0,
          std::to_string(failures) + " violations in " + std::to_string(cases) +
              " exact cases (single at (5,3); pairs at (5,3) and (6,3))"};
}

// --- criterion 6: round-trips and antisymmetric subspace dimensions ---------

Outcome criterion_roundtrips_and_dimensions() {
  Rng rng(11006);
  double worst = 0.0;
  int vectors = 0;
  bool dimensions_match = true;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= m; ++n) {
      for (int k = 0; k < 50; ++k) {
        const FockVector v = random_fock_vector(m, n, rng);
        worst = std::max(worst, max_abs_diff(to_fock(from_fock(v)), v));
        ++vectors;
      }
      if (n == 0) continue;
      // Dimension of the antisymmetric subspace: the C(M, N) normalized
      // basis tensors are orthonormal (lower bound) and antisymmetrized
      // random tensors project onto them with no residual (upper bound).
      const FockBasis basis(m, n);
      std::vector<FirstQuantTensor> slaters;
      for (const OccupationState& state : basis.states()) {
        slaters.push_back(
            slater_state(ProductState(state.occupied_orbitals()), m));
      }
      if (slaters.size() != binomial(m, n)) dimensions_match = false;
      for (std::size_t i = 0; i < slaters.size(); ++i) {
        for (std::size_t j = i; j < slaters.size(); ++j) {
          const Complex expected =
              i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
          if (std::abs(inner_product(slaters[i], slaters[j]) - expected) >
              kAmplitudeTolerance) {
            dimensions_match = false;
          }
        }
      }
      for (int k = 0; k < 10; ++k) {
        const FirstQuantTensor r = antisymmetrize(random_tensor(m, n, rng));
        worst = std::max(worst, max_abs_diff(from_fock(to_fock(r)), r));
        FirstQuantTensor projected(m, n);
        for (const FirstQuantTensor& s : slaters) {
          projected += inner_product(s, r) * s;
        }
        if (max_abs_diff(projected, r) > 1e-10) dimensions_match = false;
      }
    }
  }
  const bool pass =
      worst <= kAmplitudeTolerance && dimensions_match && vectors == 1000;
  return {pass, "max round-trip deviation " + scientific(worst) + " over " +
                    std::to_string(vectors) +
                    " vectors; subspace dimension C(M,N) on every sector M<=5"};
}

// --- criterion 7: spectra agree between the two representations -------------

Outcome criterion_spectrum_agreement() {
  Rng rng(11007);
  double worst = 0.0;
  int models = 0;
  for (const auto& [m, n] :
       {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
    for (int k = 0; k < 20; ++k) {
      ModelFile model(m);
      model.one_body = random_hermitian_one_body(m, rng);
      model.two_body = random_hermitian_two_body(m, rng);
      const SpectrumResult first =
          compute_spectrum(model, n, Representation::FirstQuantized);
      const SpectrumResult second =
          compute_spectrum(model, n, Representation::SecondQuantized);
      if (first.eigenvalues.size() != second.eigenvalues.size() ||
          first.eigenvalues.size() != binomial(m, n)) {
        return {false, "spectrum size mismatch on M=" + std::to_string(m) +
                           " N=" + std::to_string(n)};
      }
      for (std::size_t i = 0; i < first.eigenvalues.size(); ++i) {
        worst = std::max(worst, std::abs(first.eigenvalues[i] -
                                         second.eigenvalues[i]));
      }
      ++models;
    }
  }
  return {worst <= kSpectrumAgreementTolerance,
          "max eigenvalue gap " + scientific(worst) + " over " +
              std::to_string(models) + " hermitian models on 4 sectors"};
}

// --- criterion 8: injected faults are detected -------------------------------

Outcome criterion_fault_detection() {
  // (a) Swapping the two-body annihilator order must break the
  // representation equivalence for every trial while honest builds pass.
  const FockBasis basis(4, 2);
  bool honest_clean = true;
  bool fault_detected = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const TwoBodyTensor g = random_exchange_symmetric_two_body(4, rng);
    const ProductState p(
        basis.state(static_cast<std::size_t>(seed) % basis.size())
            .occupied_orbitals());
    const EquivalenceReport honest = check_two_body_equivalence(g, p);
    const EquivalenceReport faulted =
        check_two_body_equivalence(g, p, Fault::TwoBodyAnnihilatorOrder);
    if (!honest.all_pass()) honest_clean = false;
    if (faulted.all_pass() || faulted.checks.front().max_deviation <= 1e-3) {
      fault_detected = false;
    }
  }

  // (b) A ladder sign convention that disagrees between creators and
  // annihilators must fail the exhaustive pair-substitution sweep.
  int honest_failures = 0;
  int corrupted_failures = 0;
  const int m = 5;
  const FockBasis sweep_basis(m, 3);
  for (const OccupationState& state : sweep_basis.states()) {
    const ProductState p(state.occupied_orbitals());
    for (int slot_i = 1; slot_i <= 3; ++slot_i) {
      for (int slot_l = slot_i + 1; slot_l <= 3; ++slot_l) {
        for (int qi = 1; qi <= m; ++qi) {
          for (int ql = 1; ql <= m; ++ql) {
            if (!check_pair_substitution_identity(p, slot_i, slot_l,
                                                  OrbitalIndex(qi),
                                                  OrbitalIndex(ql), m)) {
              ++honest_failures;
            }
            if (!check_pair_substitution_identity(
                    p, slot_i, slot_l, OrbitalIndex(qi), OrbitalIndex(ql), m,
                    Fault::LadderSignMismatch)) {
              ++corrupted_failures;
            }
          }
        }
      }
    }
  }

  const bool pass = honest_clean && fault_detected && honest_failures == 0 &&
                    corrupted_failures > 0;
  std::ostringstream detail;
  detail << "swapped annihilators caught on 5/5 trials: "
         << (fault_detected ? "yes" : "NO") << "; sign mismatch broke "
         << corrupted_failures << " pair substitutions (honest: "
         << honest_failures << ")";
  return {pass, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    std::string label;
    long budget_ms;  // 0 = no stated budget
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"ladder anticommutation relations exact on the full space", 5000,
       criterion_anticommutators},
      {"slot-wise one-body action matches the contraction oracle", 1000,
       criterion_one_body_contraction_oracle},
      {"one-body action agrees between representations", 10000,
       criterion_one_body_equivalence},
      {"pair interaction agrees between representations", 30000,
       criterion_two_body_equivalence},
      {"substitution identities hold exactly", 30000,
       criterion_substitution_identities},
      {"round-trips are lossless and subspace dimensions match", 0,
       criterion_roundtrips_and_dimensions},
      {"spectra agree between independent routes", 60000,
       criterion_spectrum_agreement},
      {"injected sign faults are detected", 0, criterion_fault_detection},
  };

  bool all_pass = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const long elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    const bool within_budget = c.budget_ms == 0 || elapsed_ms <= c.budget_ms;
    const bool pass = outcome.pass && within_budget;
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1)
              << ": " << c.label << " -- " << outcome.detail << " ("
              << elapsed_ms << " ms";
    if (c.budget_ms > 0) {
      std::cout << ", budget " << c.budget_ms << " ms";
      if (!within_budget) std::cout << " EXCEEDED";
    }
    std::cout << ")\n";
  }
  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES above")
            << std::endl;
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
