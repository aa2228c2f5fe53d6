#pragma once

#include <stdexcept>
#include <string>

namespace dsdict {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: scalar strings, catalog JSON, CLI arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A catalog entry or argument violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The input is outside what an operation supports (e.g. non-principal element).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsdict
