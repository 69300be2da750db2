#pragma once

#include <stdexcept>
#include <string>

namespace rmspec {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "numerics broke down" can catch
/// DomainError vs NumericalError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the physical or mathematical domain was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An algorithm failed to deliver the requested accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateGamma : public DomainError {
 public:
  using DomainError::DomainError;
};

class SecondSolutionUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

class TransitionPoint : public DomainError {
 public:
  using DomainError::DomainError;
};

class GridError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rmspec
