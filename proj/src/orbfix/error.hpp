#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbfix {

enum class ErrorCode {
  Malformed,
  RepeatedPoint,
  OutOfRange,
  DegreeMismatch,
  CapExceeded,
  NonIntegerAverage,
  LongRunning,
  Budget,
  Insufficient,
  UnknownFamily,
  BadParameter,
  FileNotFound,
  FileParse,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto orbfix_status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

} // namespace orbfix
