#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anfgb {

enum class ErrorCode {
  ZeroInversion,
  LengthMismatch,
  NonCoprimeModuli,
  NoReconstruction,
  ExhaustedCandidates,
  DivisionByZeroPoly,
  ZeroPolynomial,
  ArityMismatch,
  RingMismatch,
  BadPrime,
  EmptyPool,
  RoundLimitExceeded,
  ParseError,
  UndeclaredVariable,
  NonMonicMinpoly,
  DuplicateVariable,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception; callers switch
/// on code() rather than on the message text.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Input-format errors carry a 1-based source position.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace anfgb
