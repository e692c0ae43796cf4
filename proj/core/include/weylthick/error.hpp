#pragma once

#include <stdexcept>
#include <string>

namespace weylthick {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: type names, vector literals, radii, documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold (zero direction, point outside
/// the fundamental chamber, non-fat input to a fat-only check, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. These are the mathematical
/// invariants the library asserts at runtime; seeing one means either a bug
/// or a counterexample, and the message carries the witness.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylthick
