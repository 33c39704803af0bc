#pragma once

#include <stdexcept>
#include <string>

namespace qconc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: malformed states, out-of-domain arguments, violated
// preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed or produced a value that breaks a documented
// invariant.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public InputError {
 public:
  using InputError::InputError;
};

class NegativeSpectrum : public InputError {
 public:
  using InputError::InputError;
};

class ZeroState : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDecomposition : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDensity : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class SpinTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionFailed : public InputError {
 public:
  using InputError::InputError;
};

class NonOrthonormalCoefficients : public InputError {
 public:
  using InputError::InputError;
};

class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvariantViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qconc
