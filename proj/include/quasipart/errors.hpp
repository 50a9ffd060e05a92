#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasipart {

// Base of every error raised by the library. The subclasses mirror the error
// categories the operations document (input, structure, precondition, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identifier or argument outside its valid range.
class InputError : public Error {
 public:
  using Error::Error;
};

// The graph does not have the shape an operation needs (disconnected,
// non-planar rotation system, not layered, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation is violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameter (e.g. a distribution with an empty support).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied callback broke its contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input too large for an operation that is exponential or quadratic in size.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A guarantee that the construction promises did not hold. Never swallowed.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quasipart
