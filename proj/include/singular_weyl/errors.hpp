#pragma once

#include <stdexcept>
#include <string>

namespace sw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (dimension, index range, zero s, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// λ or a pair (l,k) failed the admissibility arithmetic.
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// m is not congruent to 2k + q modulo 4.
class CongruenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation point sits on (or too close to) a coordinate singularity.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or iterative method did not reach its tolerance within budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction did not.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sw
