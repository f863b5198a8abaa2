#pragma once

#include <stdexcept>
#include <string>

namespace kaz {

/// Malformed or out-of-contract input. Surfaces as exit code 1 from the CLI.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-level identity failed to hold (formula mismatch, PRV failure,
/// non-integral index). Always an implementation bug; exit code 2.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random coefficients hit a non-generic locus; the caller should resample.
class NonGenericInput : public UserError {
 public:
  using UserError::UserError;
};

}  // namespace kaz
