#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locdec {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "engine gave up" can catch the two families
/// InputError and ResourceBound.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              std::string found)
      : InputError("syntax error at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": expected " + expected +
                   ", found " + found),
        line_(line), column_(column), expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class UnknownVariable : public InputError {
 public:
  explicit UnknownVariable(std::string name)
      : InputError("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class SemanticError : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  RingMismatch() : InputError("operands belong to different rings") {}
};

class DivisionByZero : public InputError {
 public:
  DivisionByZero() : InputError("division by zero") {}
};

class ZeroPolynomial : public InputError {
 public:
  ZeroPolynomial() : InputError("operation undefined on the zero polynomial") {}
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class NotSquare : public InputError {
 public:
  NotSquare() : InputError("matrix is not square") {}
};

class PreconditionViolation : public InputError {
 public:
  using InputError::InputError;
};

/// An entry of the matrix is a unit of the local ring. The constant part
/// must be split off first (see chip_constant_part).
class ConstantPartNonzero : public InputError {
 public:
  using InputError::InputError;
};

class NotInvertible : public InputError {
 public:
  using InputError::InputError;
};

class SquareFreeCheckFailed : public InputError {
 public:
  using InputError::InputError;
};

class DetMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Configured cap on S-pairs or basis size exceeded.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// Decomposability was established but no certificate could be verified
/// within the requested jet order.
class PrecisionExceeded : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that must hold by construction failed. Always a bug.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace locdec
