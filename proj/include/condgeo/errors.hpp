#pragma once

#include <stdexcept>
#include <string>

namespace condgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (t outside [0,1], alpha = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Point on the singular locus: zero discriminant or the toy origin.
class SingularError : public Error {
 public:
  using Error::Error;
};

// A path sample came within singularity_floor of the singular locus.
class SingularPathError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DerivativeZeroError : public Error {
 public:
  using Error::Error;
};

// Path tracking could not make progress: step fell below 1/max_steps.
class StepCollapseError : public Error {
 public:
  using Error::Error;
};

// Malformed job, path or config document.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace condgeo
