#pragma once

#include <stdexcept>
#include <string>

namespace area {

enum class ErrorKind {
  DegenerateDenominator,
  UnknownPoint,
  DuplicatePoint,
  UnsupportedShape,
  UnsupportedAtom,
  TooFewFreePoints,
  ResidualOddPower,
  ConstructionInconsistent,
  NonParallelRatio,
  DivisionByZero,
  DegenerateAfterRetries,
  SqrtOfNegative,
  Parse,
  OutOfRange,
  TimeLimit,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a non-degeneracy condition of a construction step is provably
/// violated.
class ConstructionInconsistent : public Error {
 public:
  ConstructionInconsistent(std::string step, std::string ndg)
      : Error(ErrorKind::ConstructionInconsistent,
              "construction inconsistent at step '" + step + "': ndg '" + ndg +
                  "' violated, the equality is provable"),
        step_(std::move(step)),
        ndg_(std::move(ndg)) {}

  const std::string& step() const noexcept { return step_; }
  const std::string& ndg() const noexcept { return ndg_; }

 private:
  std::string step_;
  std::string ndg_;
};

/// Syntax error in a source file, carrying a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace area
