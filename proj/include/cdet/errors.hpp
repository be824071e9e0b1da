#pragma once

#include <stdexcept>
#include <string>

namespace cdet {

/// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the mathematical domain of an operation
/// (zero at a negative power, non-square at a half power, mu_k = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request is well formed but exceeds a configured size bound.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (q, t) hit a pole or made a Gram matrix singular.
class ParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exact computation that must succeed did not (e.g. non-exact division
/// where exactness is a theorem). Signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cdet
