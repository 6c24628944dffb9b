#include "interpen/error.hpp"

namespace interpen {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::SingularMixing: return "SingularMixing";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NoFullRankTheta: return "NoFullRankTheta";
    case ErrorCode::Diagonalizable: return "Diagonalizable";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NoPositiveRadius: return "NoPositiveRadius";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PointOnCurve: return "PointOnCurve";
    case ErrorCode::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorCode::NonConvexBoundary: return "NonConvexBoundary";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace interpen
