#pragma once

#include <stdexcept>
#include <string>

namespace modelq {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the domain/problem parsers, with 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  int line;
  int column;
};

/// Applying an action in a state that does not satisfy its preconditions.
class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

/// The search node budget was exhausted before the search could decide
/// solvable vs unsolvable. Never conflated with "unsolvable".
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

/// An oracle gave an answer that matches no row of the query's inference
/// table (only possible for an inconsistent or non-optimal respondent).
class InconsistentOracleError : public Error {
 public:
  explicit InconsistentOracleError(const std::string& msg) : Error(msg) {}
};

/// Interactive session ended by end-of-input before all queries were answered.
class SessionAborted : public Error {
 public:
  explicit SessionAborted(const std::string& msg) : Error(msg) {}
};

}  // namespace modelq
