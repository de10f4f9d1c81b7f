#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metaplectic {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The hypotheses of a formula (e.g. the parity condition of the Pluecker
// splitting formula) do not hold; the caller must reduce first.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed: an exact division did not divide, a value
// that must be a sign was zero, and so on.  Never expected on valid input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A matrix handed to a Gamma_1(4)-only operation is not in Gamma_1(4).
class MembershipError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace metaplectic
