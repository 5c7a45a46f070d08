#include "mixflow/error.hpp"

namespace mixflow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WrongFrame: return "WrongFrame";
    case ErrorCode::DensityFloor: return "DensityFloor";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DomainLengthDrift: return "DomainLengthDrift";
    case ErrorCode::EmptyTrajectory: return "EmptyTrajectory";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::FileFormatError: return "FileFormatError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace mixflow
