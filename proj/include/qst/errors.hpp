#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Error taxonomy shared by the whole library. The CLI maps these onto
// process exit codes: validation problems -> 2, numerical failures -> 3,
// I/O failures -> 4.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible matrix/vector shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A scalar argument is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A request exceeds the size of the underlying finite population
// (e.g. sampling more Pauli words than exist).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Input violates a Hermiticity precondition.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

// An iterative kernel failed to converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, int iterations)
      : Error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_ = 0;
};

// Trace normalization requested on a (numerically) zero-trace matrix.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// Communication graph is malformed (disconnected, asymmetric, out of range).
class TopologyError : public Error {
 public:
  using Error::Error;
};

// Experiment specification is invalid.
class SpecError : public Error {
 public:
  using Error::Error;
};

// File read/write failure; message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qst
