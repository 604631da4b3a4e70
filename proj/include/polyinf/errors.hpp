#pragma once

#include <stdexcept>
#include <string>

namespace polyinf {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation received the zero polynomial (or another degenerate value)
/// where its contract forbids it.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported problem class: three or more variables,
/// inequality constraints, bounded constraint curves.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// The constraint gradient vanishes somewhere on the feasible curve.
class LicqFailure : public Error {
 public:
  using Error::Error;
};

/// Series expansion depth ran out before the required information was
/// determined (colliding branches or an undecided objective series).
class TruncationExhausted : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same verdict disagreed. Always a bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyinf
