#pragma once

#include <stdexcept>
#include <string>

namespace stabdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (group specs, configuration strings, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that live over different groups.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on a mathematical argument does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested beyond the configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace stabdeg
