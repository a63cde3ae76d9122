#pragma once

#include <stdexcept>
#include <string>

namespace wcn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (words, weight tables, curve files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but violates an operation's precondition:
// out-of-range indices, missing weights, invalid foldings, size guards.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Curves are not in general position for the requested tolerance.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace wcn
