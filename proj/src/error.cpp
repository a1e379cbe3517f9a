#include "ramlab/error.hpp"

namespace ramlab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kParamMismatch: return "ParamMismatch";
    case ErrorCode::kNonUnitExponent: return "NonUnitExponent";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kHeightExceeded: return "HeightExceeded";
    case ErrorCode::kTruncationTooLow: return "TruncationTooLow";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kPrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::kNoConvergenceWithinCut: return "NoConvergenceWithinCut";
    case ErrorCode::kRegimeViolation: return "RegimeViolation";
    case ErrorCode::kStructureViolation: return "StructureViolation";
    case ErrorCode::kNonCharacter: return "NonCharacter";
    case ErrorCode::kRankError: return "RankError";
    case ErrorCode::kUnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::kDegenerateWeightRange: return "DegenerateWeightRange";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace ramlab
