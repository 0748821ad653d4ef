// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fockbridge {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Orbital count M outside [1, kMaxOrbitals], or M < 1 where one is required.
struct InvalidDimension : Error {
  using Error::Error;
};

/// Orbital label outside [1, M].
struct InvalidOrbital : Error {
  using Error::Error;
};

/// Requested sector (M, N) contains no states (N < 0 or N > M).
struct EmptySectorError : Error {
  using Error::Error;
};

/// Problem size beyond the configured desk-scale caps.
struct CapacityError : Error {
  using Error::Error;
};

/// Orbital list not strictly ascending where a reference ordering is required.
struct ReferenceOrderError : Error {
  using Error::Error;
};

/// Operation needs more particle slots than the state provides.
struct ArityError : Error {
  using Error::Error;
};

/// Slot positions passed in the wrong order (i must precede l).
struct SlotOrderError : Error {
  using Error::Error;
};

/// Incompatible matrix/tensor dimensions.
struct ShapeMismatch : Error {
  using Error::Error;
};

/// Incompatible Fock sectors or bases.
struct SectorMismatch : Error {
  using Error::Error;
};

/// Tensor fails the antisymmetry requirement beyond tolerance.
struct NotAntisymmetricError : Error {
  using Error::Error;
};

/// Two-body matrix elements violate the required exchange symmetry.
struct SymmetryError : Error {
  using Error::Error;
};

/// Input matrix elements are not hermitian where a spectrum requires it.
struct HermiticityError : Error {
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& what, int line_number)
      : Error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

}  // namespace fockbridge
