#pragma once

#include <stdexcept>
#include <string>

namespace wlanrr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative attempt rate, tau >= 1, bad utility parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vectors that must share a station count do not.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inputs are well-formed but violate an operation's precondition,
/// e.g. an attempt vector that is not on the rate-region boundary.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A single-station WLAN has no attained boundary: h(x) < 1 for every
/// finite x when a > 0.
class BoundaryUnattainable : public PreconditionError {
 public:
  BoundaryUnattainable() : PreconditionError("boundary unattainable") {}
  using PreconditionError::PreconditionError;
};

/// The utility maximisation problem has no strictly feasible point, or
/// is unbounded.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace wlanrr
