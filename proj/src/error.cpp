#include "sindhikit/error.hpp"

namespace sindhikit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::Encoding: return "ENCODING";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::Conflict: return "CONFLICT";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

EncodingError::EncodingError(const std::string& message, std::size_t byte_offset)
    : Error(ErrorCode::Encoding, message, "byte offset " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message,
            "line " + std::to_string(line)),
      line_(line) {}

}  // namespace sindhikit
