#include "zenon/errors.hpp"

namespace zenon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotBlockDiagonal: return "NotBlockDiagonal";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::ZeroAntiHermitianPart: return "ZeroAntiHermitianPart";
    case ErrorCode::OutsideStroboscopicRegime: return "OutsideStroboscopicRegime";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ProbabilityUnderflow: return "ProbabilityUnderflow";
    case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPSD:
    case ErrorCode::ProbabilityUnderflow:
    case ErrorCode::RoundTripFailure:
    case ErrorCode::ConvergenceFailure:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace zenon
