// Copyright 2026 The fracquad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fracquad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Multistep generator whose fractional power is not a power series.
class DegenerateMethodError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Signal and weights built for different step sizes.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

/// Newton-Cotes panels do not tile the grid.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of its evaluation budget.
class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

/// Sinusoid fit residual too large to trust amplitude/phase.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracquad
