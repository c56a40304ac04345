#include "wavesrc/errors.hpp"

namespace wavesrc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "INVALID_DIMENSION";
    case ErrorCode::kCflViolation: return "CFL_VIOLATION";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kIncompatibleData: return "INCOMPATIBLE_DATA";
    case ErrorCode::kUnderdeterminedSystem: return "UNDERDETERMINED_SYSTEM";
    case ErrorCode::kRankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::kSingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::kZeroMatrix: return "ZERO_MATRIX";
    case ErrorCode::kDegenerateCurve: return "DEGENERATE_CURVE";
    case ErrorCode::kUnknownExample: return "UNKNOWN_EXAMPLE";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace wavesrc
