#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands have incompatible or unsupported dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Input to a Hermitian-only routine exceeded the Hermiticity tolerance.
class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

// A candidate density matrix violates a state invariant; the message names
// the violated invariant (Hermiticity, trace, or positivity).
class InvalidState : public Error {
 public:
  using Error::Error;
};

// Joint probability table with negative weights or wrong normalization.
class InvalidProbabilityTable : public Error {
 public:
  using Error::Error;
};

// A scalar parameter lies outside its documented range.
class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

// A conditional-population closed form was evaluated where its
// denominator vanishes (a measurement outcome of probability zero).
class DegenerateOutcome : public Error {
 public:
  using Error::Error;
};

// Output file could not be opened or written.
class IoFailure : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed; indicates a defect, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ergo
