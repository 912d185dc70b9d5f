#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lkcds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Arguments outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A precondition or postcondition of a constructive step was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An exact search ran out of its node budget or was cancelled.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace lkcds
