#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pellab {

enum class ErrorCode {
  DivByZeroPoly,
  GcdOfZeros,
  ZeroInput,
  DegreeTooSmall,
  SizeMismatch,
  NotADivisor,
  NeedFullCycle,
  NotPreserved,
  ClosureOverflow,
  DegreeOrder,
  NotSpecialForm,
  TooLarge,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pellab
