#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace spnkit {

enum class ErrorKind {
  InvalidArgument,
  ZeroPivot,
  NoConvergence,
  DimensionTooLarge,
  Undecided,
  NotInSupportedClass,
  LpNumericalFailure,
  InvalidParams,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI maps to exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based position in the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorKind::ParseError, format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

/// An iterative routine ran out of budget. `best()` carries the best bound
/// seen so far when one exists.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& message,
                         std::optional<double> best = std::nullopt)
      : Error(ErrorKind::NoConvergence, message), best_(best) {}

  std::optional<double> best() const noexcept { return best_; }

 private:
  std::optional<double> best_;
};

}  // namespace spnkit
