#pragma once

#include <stdexcept>
#include <string>

namespace hrc {

// Bad input that the caller could have checked (maps to CLI exit code 2).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPhysicalMirrorError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Failures of the numerics themselves (maps to CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(const std::string& what, double abs_det)
      : NumericalError(what), abs_det_(abs_det) {}
  double abs_det() const noexcept { return abs_det_; }

 private:
  double abs_det_;
};

class NoSplitResonanceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A fit that could not produce an estimate (degenerate data, non-decaying
// trace, optimizer breakdown). Carries a human-readable diagnostic.
class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace hrc
