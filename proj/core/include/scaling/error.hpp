#pragma once

#include <stdexcept>
#include <string>

namespace scaling {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, H_p scalars, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of the type it is being turned into,
/// or an operation is applied outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different primes, slope groups or domains.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds the configured search budget.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace scaling
