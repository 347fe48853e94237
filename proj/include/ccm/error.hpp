#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

enum class ErrorCode {
  kFieldOverflow,
  kOutOfBounds,
  kWidthOverflow,
  kNarrowingRequested,
  kCorruptStream,
  kShapeMismatch,
  kArithmeticOverflow,
  kInvalidArgument,
  kParseError,
  kIoError,
  kBadMagic,
  kTruncatedPayload,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccm
