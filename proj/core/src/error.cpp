#include "outagekit/error.hpp"

namespace outagekit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeDuration: return "NEGATIVE_DURATION";
    case ErrorCode::MissingHeader: return "MISSING_HEADER";
    case ErrorCode::EmptyEvent: return "EMPTY_EVENT";
    case ErrorCode::MissingLabel: return "MISSING_LABEL";
    case ErrorCode::NonRectangular: return "NON_RECTANGULAR";
    case ErrorCode::TooFewSamples: return "TOO_FEW_SAMPLES";
    case ErrorCode::BinMismatch: return "BIN_MISMATCH";
    case ErrorCode::DegenerateDurations: return "DEGENERATE_DURATIONS";
    case ErrorCode::NoLargeFailures: return "NO_LARGE_FAILURES";
    case ErrorCode::EmptyConfig: return "EMPTY_CONFIG";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace outagekit
