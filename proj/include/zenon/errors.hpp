#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zenon {

enum class ErrorCode {
  // input validation
  InvalidArgument,
  ParseError,
  BadDimension,
  SiteOutOfRange,
  NotHermitian,
  NotBlockDiagonal,
  StepTooLarge,
  ZeroAntiHermitianPart,
  OutsideStroboscopicRegime,
  // numerical failures
  NotPSD,
  ProbabilityUnderflow,
  RoundTripFailure,
  ConvergenceFailure,
};

std::string_view to_string(ErrorCode code);

/// Numerical failures are distinguished from bad input so the CLI can map
/// them to different exit codes.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zenon
