#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetasum {

enum class ErrorCode {
  InvalidArgument,
  OutOfContract,
  PoleAtOne,
  PoleTooClose,
  PoleOfChi,
  ZeroOfZeta,
  NonFinite,
  PrecisionUnachievable,
  MissedZero,
  AmbiguousCount,
  MalformedLine,
  NotAscending,
  VerificationFailed,
  InsufficientTable,
  InexactX,
  XNotInteger,
  TablesTooShallow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `line()` is set for file-format
/// errors (1-based), 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long line = 0)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  long line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  long line_;
};

}  // namespace zetasum
