#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamma_sharp {

enum class ErrorCode {
  kDomain,
  kDivisionByZero,
  kTruncation,
  kUnresolvedUnknown,
  kNoRationalRoot,
  kNonlinearUnresolved,
  kPole,
  kWidthExceeded,
  kUsage,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; the code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gamma_sharp
