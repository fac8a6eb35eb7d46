#include "qcpg/errors.hpp"

namespace qcpg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedParens: return "UnbalancedParens";
    case ErrorCode::kEmptyLabel: return "EmptyLabel";
    case ErrorCode::kTrailingInput: return "TrailingInput";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kSpawnFailure: return "SpawnFailure";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kMalformedControlPrefix: return "MalformedControlPrefix";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kTreeLengthMismatch: return "TreeLengthMismatch";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kDegenerateDesign: return "DegenerateDesign";
    case ErrorCode::kEmptyEvalSet: return "EmptyEvalSet";
    case ErrorCode::kEmptyContext: return "EmptyContext";
    case ErrorCode::kAllGenerationsFailed: return "AllGenerationsFailed";
    case ErrorCode::kMissingZeroPoint: return "MissingZeroPoint";
    case ErrorCode::kNoFeasibleOffset: return "NoFeasibleOffset";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kAllTied: return "AllTied";
    case ErrorCode::kModelFormat: return "ModelFormat";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcpg
