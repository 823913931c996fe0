// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace trendlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A raw parameter tuple violates one of the admissibility constraints.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is defined only for a different phase regime.
class RegimeMismatch : public Error {
 public:
  using Error::Error;
};

/// The mean replacement matrix has a (near-)repeated eigenvalue, so the
/// spectral formulas degenerate. Reachable only at lambda2 == 1.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach the accuracy target at its node cap.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a configured size or memory cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace trendlab
