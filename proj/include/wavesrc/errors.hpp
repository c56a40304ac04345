#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavesrc {

enum class ErrorCode {
  kInvalidDimension,
  kCflViolation,
  kDimensionMismatch,
  kIncompatibleData,
  kUnderdeterminedSystem,
  kRankDeficient,
  kSingularSystem,
  kZeroMatrix,
  kDegenerateCurve,
  kUnknownExample,
  kInvalidArgument,
  kIoError,
};

/// Stable machine-readable name, e.g. "CFL_VIOLATION".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavesrc
