#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramlab {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kParamMismatch,
  kNonUnitExponent,
  kNotDivisible,
  kCapacityExceeded,
  kHeightExceeded,
  kTruncationTooLow,
  kBudgetExceeded,
  kPrecisionTooLow,
  kNoConvergenceWithinCut,
  kRegimeViolation,
  kStructureViolation,
  kNonCharacter,
  kRankError,
  kUnsupportedPrime,
  kDegenerateWeightRange,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code name, e.g. "NotDivisible: ...".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ramlab
