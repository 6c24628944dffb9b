#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace interpen {

enum class ErrorCode {
  NonFiniteInput,
  NotElliptic,
  ParameterOutOfRange,
  SingularMixing,
  DegreeTooHigh,
  NoFullRankTheta,
  Diagonalizable,
  IllConditioned,
  KTooSmall,
  NoPositiveRadius,
  DegenerateInput,
  PointOnCurve,
  TooCloseToBoundary,
  NonConvexBoundary,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace interpen
