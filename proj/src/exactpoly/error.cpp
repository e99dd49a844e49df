#include "pellab/error.hpp"

namespace pellab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivByZeroPoly: return "DivByZeroPoly";
    case ErrorCode::GcdOfZeros: return "GcdOfZeros";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NeedFullCycle: return "NeedFullCycle";
    case ErrorCode::NotPreserved: return "NotPreserved";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::DegreeOrder: return "DegreeOrder";
    case ErrorCode::NotSpecialForm: return "NotSpecialForm";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pellab
