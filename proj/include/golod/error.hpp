#pragma once

#include <stdexcept>
#include <string>

namespace golod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different numbers of variables.
class WidthMismatch : public Error {
 public:
  WidthMismatch(std::size_t a, std::size_t b)
      : Error("width mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Zero or unit ideal handed to an operation that needs a proper nonzero one.
class ImproperIdeal : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (generator count, vertex count, kmax) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates a precondition not covered above (non-squarefree, void complex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace golod
