#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: bad arguments, violated preconditions, malformed data.
/// Maps to CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or cover file. Carries the 1-based offending line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Instance generation could not satisfy the requested parameters.
class GenerationError : public InputError {
 public:
  using InputError::InputError;
};

/// A search exhausted its node budget. Carries the best cover found so
/// far, if any. Maps to CLI exit code 2.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::vector<int> incumbent,
                      long long nodes_explored)
      : Error(what),
        incumbent_(std::move(incumbent)),
        nodes_explored_(nodes_explored) {}
  const std::vector<int>& incumbent() const { return incumbent_; }
  long long nodes_explored() const { return nodes_explored_; }

 private:
  std::vector<int> incumbent_;
  long long nodes_explored_;
};

/// An internal guarantee failed to hold. Maps to CLI exit code 3.
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hvc
