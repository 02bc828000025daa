#pragma once

#include <stdexcept>
#include <string>

namespace toriplan {

enum class ErrorCode {
  kIndexOutOfRange,
  kInvalidArgument,
  kSizeCap,
  kAntipodalInput,
  kPoleInput,
  kPointNotInComplex,
  kGradingMismatch,
  kParse,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toriplan
