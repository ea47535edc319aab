#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sindhikit {

/// Closed error vocabulary shared by the library, the CLI and the service.
enum class ErrorCode { Parse, Range, Encoding, NotFound, Conflict, Internal };

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Malformed UTF-8. `byte_offset` is the offset of the first bad byte.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& message, std::size_t byte_offset);
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Malformed structured text. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& message)
      : Error(ErrorCode::Range, message) {}
};

}  // namespace sindhikit
