#pragma once

#include <stdexcept>
#include <string>

namespace qcpg {

// One code per error class. The CLI maps each code to its own exit status.
enum class ErrorCode {
  kUnbalancedParens = 1,
  kEmptyLabel,
  kTrailingInput,
  kNonFinite,
  kSpawnFailure,
  kProtocolError,
  kMalformedControlPrefix,
  kIoError,
  kMalformedRecord,
  kTreeLengthMismatch,
  kInsufficientData,
  kDegenerateDesign,
  kEmptyEvalSet,
  kEmptyContext,
  kAllGenerationsFailed,
  kMissingZeroPoint,
  kNoFeasibleOffset,
  kLengthMismatch,
  kAllTied,
  kModelFormat,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Errors that point into an input text (byte offset) or file (1-based line).
class LocatedError : public Error {
 public:
  LocatedError(ErrorCode code, const std::string& message, std::size_t location)
      : Error(code, message + " (at " + std::to_string(location) + ")"),
        location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace qcpg
