#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sindhikit::unicode {

constexpr char32_t kMaxCodePoint = 0x10FFFF;

constexpr bool is_scalar(std::uint32_t value) noexcept {
  return value <= kMaxCodePoint && !(value >= 0xD800 && value <= 0xDFFF);
}

/// Strict decoder: rejects overlong forms, surrogates and values past
/// U+10FFFF. Throws EncodingError carrying the offending byte offset.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

/// "U+0633" style, at least four uppercase hex digits.
std::string format_code_point(char32_t cp);

/// Parses "U+XXXX" (4 to 6 hex digits, either case). Returns the raw value,
/// which may still be outside the scalar range; nullopt when malformed.
std::optional<std::uint32_t> parse_code_point(std::string_view token);

}  // namespace sindhikit::unicode
