#pragma once

#include <stdexcept>
#include <string>

namespace tdho {

/// Input outside an operation's domain (bad parameters, invalid quench).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that cannot be completed reliably (singular scale,
/// non positive-definite quadratic form, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle quadrature did not converge under grid refinement.
class InsufficientGrid : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Malformed or incomplete scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tdho
