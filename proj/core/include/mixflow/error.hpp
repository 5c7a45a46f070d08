#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixflow {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  NonPositiveEntry,
  BadDimension,
  SingularMatrix,
  LengthMismatch,
  WrongFrame,
  DensityFloor,
  NonFinite,
  DomainLengthDrift,
  EmptyTrajectory,
  ParseError,
  ValidationError,
  NonPositiveDensity,
  FileFormatError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Configuration text errors point at the offending line and column (1-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mixflow
