#pragma once

#include <stdexcept>
#include <string>

namespace sshg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent outside a generator's legal domain, non-invertible divisor, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rejected substitution (non-linear exponent, non-terminating rule set).
class SubstitutionError : public Error {
 public:
  using Error::Error;
};

// Derivation applied to a symbol it does not know.
class DerivationError : public Error {
 public:
  using Error::Error;
};

// Linear-solve problems: nonlinear occurrence, inconsistent system.
class SolveError : public Error {
 public:
  using Error::Error;
};

// Matrix shape or grading mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Text-format error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace sshg
