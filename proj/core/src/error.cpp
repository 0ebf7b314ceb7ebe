#include "nmapgen/error.hpp"

namespace nmapgen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFileNotFound:
      return "file not found";
    case ErrorCode::kMalformedImage:
      return "malformed image";
    case ErrorCode::kUnsupportedFormat:
      return "unsupported format";
    case ErrorCode::kIo:
      return "i/o error";
    case ErrorCode::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
  }
  return "unknown error";
}

}  // namespace nmapgen
