#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nmapgen {

enum class ErrorCode {
  kFileNotFound,
  kMalformedImage,
  kUnsupportedFormat,
  kIo,
  kDimensionMismatch,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI exit status, HTTP status) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nmapgen
