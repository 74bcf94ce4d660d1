#pragma once

#include <stdexcept>
#include <string>

namespace debruijn {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (bit strings, card codes, crib documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (index, label, rank).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A size guard (histogram width, graph rank, enumeration length) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// No sequence exists for the requested parameters.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// A stack or crib sheet that does not satisfy its invariants.
class InvalidStack : public Error {
 public:
  using Error::Error;
};

// A colour signal whose window does not occur in the stack.
class ImpossibleSignal : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace debruijn
