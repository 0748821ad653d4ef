// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/first_quant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fockbridge {

namespace {

void check_num_orbitals(int num_orbitals) {
  if (num_orbitals < 1 || num_orbitals > kMaxOrbitals) {
    throw InvalidDimension("orbital count " + std::to_string(num_orbitals) +
                           " outside [1, " + std::to_string(kMaxOrbitals) +
                           "]");
  }
}

void check_orbital_label(int label, int num_orbitals) {
  if (label < 1 || label > num_orbitals) {
    throw InvalidOrbital("orbital " + std::to_string(label) + " outside [1, " +
                         std::to_string(num_orbitals) + "]");
  }
}

double equality_scale(const FirstQuantTensor& a, const FirstQuantTensor& b) {
  return std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace

ProductState::ProductState(std::vector<int> orbitals)
    : orbitals_(std::move(orbitals)) {
  if (orbitals_.empty()) {
    throw ArityError("a product state needs at least one particle slot");
  }
  for (int label : orbitals_) {
    check_orbital_label(label, kMaxOrbitals);
  }
}

int ProductState::orbital(int slot) const {
  if (slot < 1 || slot > size()) {
    throw InvalidOrbital("slot " + std::to_string(slot) + " outside [1, " +
                         std::to_string(size()) + "]");
  }
  return orbitals_[static_cast<std::size_t>(slot - 1)];
}

bool ProductState::is_reference() const noexcept {
  for (std::size_t j = 1; j < orbitals_.size(); ++j) {
    if (orbitals_[j - 1] >= orbitals_[j]) return false;
  }
  return true;
}

int ProductState::max_orbital() const noexcept {
  return *std::max_element(orbitals_.begin(), orbitals_.end());
}

FirstQuantTensor::FirstQuantTensor(int num_orbitals, int num_particles)
    : num_orbitals_(num_orbitals), num_particles_(num_particles) {
  check_num_orbitals(num_orbitals);
  if (num_particles < 0) {
    throw InvalidDimension("negative particle count " +
                           std::to_string(num_particles));
  }
  if (num_particles > kMaxTensorRank) {
    throw CapacityError("tensor rank " + std::to_string(num_particles) +
                        " above cap " + std::to_string(kMaxTensorRank));
  }
  std::size_t total = 1;
  for (int slot = 0; slot < num_particles; ++slot) {
    total *= static_cast<std::size_t>(num_orbitals);
    if (total > kMaxTensorSize) {
      throw CapacityError("tensor size " + std::to_string(num_orbitals) + "^" +
                          std::to_string(num_particles) + " above cap " +
                          std::to_string(kMaxTensorSize));
    }
  }
  coeffs_.assign(total, Complex(0.0, 0.0));
}

std::size_t FirstQuantTensor::flat_index(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != num_particles_) {
    throw ShapeMismatch("multi-index rank " + std::to_string(indices.size()) +
                        " does not match tensor rank " +
                        std::to_string(num_particles_));
  }
  std::size_t flat = 0;
  for (int i : indices) {
    if (i < 0 || i >= num_orbitals_) {
      throw InvalidOrbital("tensor index " + std::to_string(i) +
                           " outside [0, " + std::to_string(num_orbitals_ - 1) +
                           "]");
    }
    flat = flat * static_cast<std::size_t>(num_orbitals_) +
           static_cast<std::size_t>(i);
  }
  return flat;
}

void FirstQuantTensor::unflatten(std::size_t flat,
                                 std::span<int> indices_out) const {
  for (int slot = num_particles_ - 1; slot >= 0; --slot) {
    indices_out[static_cast<std::size_t>(slot)] =
        static_cast<int>(flat % static_cast<std::size_t>(num_orbitals_));
    flat /= static_cast<std::size_t>(num_orbitals_);
  }
}

double FirstQuantTensor::norm() const {
  double sum = 0.0;
  for (const Complex& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

double FirstQuantTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void FirstQuantTensor::check_same_shape(const FirstQuantTensor& other) const {
  if (num_orbitals_ != other.num_orbitals_ ||
      num_particles_ != other.num_particles_) {
    throw ShapeMismatch("tensor shapes (M = " + std::to_string(num_orbitals_) +
                        ", N = " + std::to_string(num_particles_) +
                        ") and (M = " + std::to_string(other.num_orbitals_) +
                        ", N = " + std::to_string(other.num_particles_) +
                        ") differ");
  }
}

FirstQuantTensor& FirstQuantTensor::operator+=(const FirstQuantTensor& other) {
  check_same_shape(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

FirstQuantTensor& FirstQuantTensor::operator-=(const FirstQuantTensor& other) {
  check_same_shape(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

FirstQuantTensor& FirstQuantTensor::operator*=(Complex factor) {
  for (Complex& c : coeffs_) c *= factor;
  return *this;
}

FirstQuantTensor operator+(FirstQuantTensor a, const FirstQuantTensor& b) {
  a += b;
  return a;
}

FirstQuantTensor operator-(FirstQuantTensor a, const FirstQuantTensor& b) {
  a -= b;
  return a;
}

FirstQuantTensor operator*(Complex factor, FirstQuantTensor t) {
  t *= factor;
  return t;
}

double max_abs_diff(const FirstQuantTensor& a, const FirstQuantTensor& b) {
  if (a.num_orbitals() != b.num_orbitals() ||
      a.num_particles() != b.num_particles()) {
    throw ShapeMismatch("comparing tensors of different shapes");
  }
  double dev = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dev = std::max(dev, std::abs(a[j] - b[j]));
  }
  return dev;
}

bool approx_equal(const FirstQuantTensor& a, const FirstQuantTensor& b) {
  return max_abs_diff(a, b) <= 1e-12 * equality_scale(a, b);
}

bool next_multi_index(std::span<int> indices, int extent) {
  for (int slot = static_cast<int>(indices.size()) - 1; slot >= 0; --slot) {
    if (++indices[static_cast<std::size_t>(slot)] < extent) return true;
    indices[static_cast<std::size_t>(slot)] = 0;
  }
  return false;
}

OneBodyMatrix::OneBodyMatrix(int num_orbitals) : num_orbitals_(num_orbitals) {
  check_num_orbitals(num_orbitals);
  entries_.assign(static_cast<std::size_t>(num_orbitals) *
                      static_cast<std::size_t>(num_orbitals),
                  Complex(0.0, 0.0));
}

std::size_t OneBodyMatrix::index(int alpha, int beta) const {
  check_orbital_label(alpha, num_orbitals_);
  check_orbital_label(beta, num_orbitals_);
  return static_cast<std::size_t>(alpha - 1) *
             static_cast<std::size_t>(num_orbitals_) +
         static_cast<std::size_t>(beta - 1);
}

OneBodyMatrix OneBodyMatrix::identity(int num_orbitals) {
  OneBodyMatrix f(num_orbitals);
  for (int alpha = 1; alpha <= num_orbitals; ++alpha) {
    f(alpha, alpha) = Complex(1.0, 0.0);
  }
  return f;
}

bool OneBodyMatrix::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (int alpha = 1; alpha <= num_orbitals_; ++alpha) {
    for (int beta = alpha; beta <= num_orbitals_; ++beta) {
      if (std::abs((*this)(alpha, beta) - std::conj((*this)(beta, alpha))) >
          tol * scale) {
        return false;
      }
    }
  }
  return true;
}

double OneBodyMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

TwoBodyTensor::TwoBodyTensor(int num_orbitals) : num_orbitals_(num_orbitals) {
  check_num_orbitals(num_orbitals);
  std::size_t m = static_cast<std::size_t>(num_orbitals);
  entries_.assign(m * m * m * m, Complex(0.0, 0.0));
}

std::size_t TwoBodyTensor::index(int alpha, int beta, int gamma,
                                 int delta) const {
  check_orbital_label(alpha, num_orbitals_);
  check_orbital_label(beta, num_orbitals_);
  check_orbital_label(gamma, num_orbitals_);
  check_orbital_label(delta, num_orbitals_);
  const std::size_t m = static_cast<std::size_t>(num_orbitals_);
  return ((static_cast<std::size_t>(alpha - 1) * m +
           static_cast<std::size_t>(beta - 1)) *
              m +
          static_cast<std::size_t>(gamma - 1)) *
             m +
         static_cast<std::size_t>(delta - 1);
}

TwoBodyTensor TwoBodyTensor::pair_identity(int num_orbitals) {
  TwoBodyTensor g(num_orbitals);
  for (int alpha = 1; alpha <= num_orbitals; ++alpha) {
    for (int beta = 1; beta <= num_orbitals; ++beta) {
      g(alpha, beta, alpha, beta) = Complex(1.0, 0.0);
    }
  }
  return g;
}

bool TwoBodyTensor::has_exchange_symmetry(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (int a = 1; a <= num_orbitals_; ++a) {
    for (int b = 1; b <= num_orbitals_; ++b) {
      for (int c = 1; c <= num_orbitals_; ++c) {
        for (int d = 1; d <= num_orbitals_; ++d) {
          if (std::abs((*this)(a, b, c, d) - (*this)(b, a, d, c)) >
              tol * scale) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

TwoBodyTensor TwoBodyTensor::symmetrized() const {
  TwoBodyTensor out(num_orbitals_);
  for (int a = 1; a <= num_orbitals_; ++a) {
    for (int b = 1; b <= num_orbitals_; ++b) {
      for (int c = 1; c <= num_orbitals_; ++c) {
        for (int d = 1; d <= num_orbitals_; ++d) {
          out(a, b, c, d) = 0.5 * ((*this)(a, b, c, d) + (*this)(b, a, d, c));
        }
      }
    }
  }
  return out;
}

bool TwoBodyTensor::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (int a = 1; a <= num_orbitals_; ++a) {
    for (int b = 1; b <= num_orbitals_; ++b) {
      for (int c = 1; c <= num_orbitals_; ++c) {
        for (int d = 1; d <= num_orbitals_; ++d) {
          if (std::abs((*this)(a, b, c, d) - std::conj((*this)(c, d, a, b))) >
              tol * scale) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

double TwoBodyTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

FirstQuantTensor product_state_tensor(const ProductState& p,
                                      int num_orbitals) {
  check_num_orbitals(num_orbitals);
  for (int label : p.orbitals()) check_orbital_label(label, num_orbitals);
  FirstQuantTensor t(num_orbitals, p.size());
  std::vector<int> idx(static_cast<std::size_t>(p.size()));
  for (int slot = 1; slot <= p.size(); ++slot) {
    idx[static_cast<std::size_t>(slot - 1)] = p.orbital(slot) - 1;
  }
  t.at(idx) = Complex(1.0, 0.0);
  return t;
}

int permutation_sign(std::span<const int> permutation) {
  int inversions = 0;
  for (std::size_t a = 0; a < permutation.size(); ++a) {
    for (std::size_t b = a + 1; b < permutation.size(); ++b) {
      if (permutation[a] > permutation[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

FirstQuantTensor antisymmetrize(const FirstQuantTensor& t) {
  const int m = t.num_orbitals();
  const int n = t.num_particles();
  FirstQuantTensor out(m, n);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  // Strides of the flat layout: slot k moves in steps of M^(N-1-k).
  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int k = n - 2; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] =
        stride[static_cast<std::size_t>(k + 1)] * static_cast<std::size_t>(m);
  }

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  do {
    const double sign = permutation_sign(perm);
    // Flat offset of the permuted index (i_{perm(1)}, ..., i_{perm(N)}):
    // slot j of the source multi-index contributes with stride of the slot
    // it lands in, so out(idx) reads t at dot(idx, permuted_stride).
    std::vector<std::size_t> permuted_stride(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      permuted_stride[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] +=
          stride[static_cast<std::size_t>(k)];
    }
    std::fill(idx.begin(), idx.end(), 0);
    std::size_t out_flat = 0;
    std::size_t src_flat = 0;
    for (;;) {
      out[out_flat] += sign * t[src_flat];
      // Row-major increment of idx with synchronized flat offsets.
      int slot = n - 1;
      for (; slot >= 0; --slot) {
        const std::size_t s = static_cast<std::size_t>(slot);
        if (++idx[s] < m) {
          out_flat += stride[s];
          src_flat += permuted_stride[s];
          break;
        }
        idx[s] = 0;
        out_flat -= stride[s] * static_cast<std::size_t>(m - 1);
        src_flat -= permuted_stride[s] * static_cast<std::size_t>(m - 1);
      }
      if (slot < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FirstQuantTensor antisymmetrized_product_state(const ProductState& p,
                                               int num_orbitals) {
  FirstQuantTensor t = antisymmetrize(product_state_tensor(p, num_orbitals));
  t *= Complex(1.0 / std::sqrt(static_cast<double>(factorial(p.size()))), 0.0);
  return t;
}

FirstQuantTensor slater_state(const ProductState& p, int num_orbitals) {
  if (!p.is_reference()) {
    throw ReferenceOrderError(
        "orbital list is not strictly ascending; pass the reference ordering");
  }
  return antisymmetrized_product_state(p, num_orbitals);
}

FirstQuantTensor apply_one_body(const OneBodyMatrix& f,
                                const FirstQuantTensor& t) {
  if (f.num_orbitals() != t.num_orbitals()) {
    throw ShapeMismatch("one-body matrix dimension " +
                        std::to_string(f.num_orbitals()) +
                        " does not match tensor orbital count " +
                        std::to_string(t.num_orbitals()));
  }
  const int m = t.num_orbitals();
  const int n = t.num_particles();
  FirstQuantTensor out(m, n);
  if (n == 0) return out;

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> src(static_cast<std::size_t>(n), 0);
  do {
    Complex acc(0.0, 0.0);
    for (int slot = 0; slot < n; ++slot) {
      std::copy(idx.begin(), idx.end(), src.begin());
      const int row = idx[static_cast<std::size_t>(slot)];
      for (int p = 0; p < m; ++p) {
        src[static_cast<std::size_t>(slot)] = p;
        acc += f(row + 1, p + 1) * t.at(src);
      }
    }
    out.at(idx) = acc;
  } while (next_multi_index(idx, m));
  return out;
}

FirstQuantTensor apply_two_body(const TwoBodyTensor& g,
                                const FirstQuantTensor& t) {
  if (g.num_orbitals() != t.num_orbitals()) {
    throw ShapeMismatch("two-body tensor dimension " +
                        std::to_string(g.num_orbitals()) +
                        " does not match tensor orbital count " +
                        std::to_string(t.num_orbitals()));
  }
  const int m = t.num_orbitals();
  const int n = t.num_particles();
  if (n < 2) {
    throw ArityError("pair interaction needs at least two particle slots");
  }
  FirstQuantTensor out(m, n);

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> src(static_cast<std::size_t>(n), 0);
  do {
    Complex acc(0.0, 0.0);
    for (int slot_i = 0; slot_i < n; ++slot_i) {
      for (int slot_l = slot_i + 1; slot_l < n; ++slot_l) {
        std::copy(idx.begin(), idx.end(), src.begin());
        const int qi = idx[static_cast<std::size_t>(slot_i)];
        const int ql = idx[static_cast<std::size_t>(slot_l)];
        for (int pi = 0; pi < m; ++pi) {
          src[static_cast<std::size_t>(slot_i)] = pi;
          for (int pl = 0; pl < m; ++pl) {
            src[static_cast<std::size_t>(slot_l)] = pl;
            acc += g(qi + 1, ql + 1, pi + 1, pl + 1) * t.at(src);
          }
        }
      }
    }
    out.at(idx) = acc;
  } while (next_multi_index(idx, m));
  return out;
}

Complex inner_product(const FirstQuantTensor& a, const FirstQuantTensor& b) {
  if (a.num_orbitals() != b.num_orbitals() ||
      a.num_particles() != b.num_particles()) {
    throw ShapeMismatch("inner product across different tensor shapes");
  }
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    sum += std::conj(a[j]) * b[j];
  }
  return sum;
}

}  // namespace fockbridge
