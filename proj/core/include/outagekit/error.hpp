#pragma once

#include <stdexcept>
#include <string>

namespace outagekit {

enum class ErrorCode {
  NegativeDuration,
  MissingHeader,
  EmptyEvent,
  MissingLabel,
  NonRectangular,
  TooFewSamples,
  BinMismatch,
  DegenerateDurations,
  NoLargeFailures,
  EmptyConfig,
  IoError,
};

const char* error_code_name(ErrorCode code);

// Thrown by analysis operations on precondition violations. The code maps
// one-to-one onto the reason strings used in reports and CLI diagnostics.
class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace outagekit
