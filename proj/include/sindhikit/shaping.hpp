#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sindhikit/charset.hpp"

namespace sindhikit {

enum class Form { Isolated, Initial, Medial, Final };

std::string_view to_string(Form f);

/// Half-open range of logical input indices.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ShapedGlyph {
  char32_t base;  // the input character, or a lam-alif presentation identifier
  Form form;
  std::optional<std::pair<char32_t, char32_t>> ligature_of;
  SourceSpan source;

  friend bool operator==(const ShapedGlyph&, const ShapedGlyph&) = default;
};

inline constexpr char32_t kLam = 0x0644;
inline constexpr char32_t kAlif = 0x0627;
inline constexpr char32_t kLamAlifIsolated = 0xFEFB;
inline constexpr char32_t kLamAlifFinal = 0xFEFC;

/// Contextual form for a letter that has (or would have) a join with the
/// previous letter (`joins_previous`) and with the next one (`joins_next`).
/// RightJoining letters never join forward; NonJoining and Transparent
/// characters never join at all.
constexpr Form form_of(bool joins_previous, bool joins_next, JoiningClass cls) noexcept {
  if (cls == JoiningClass::NonJoining || cls == JoiningClass::Transparent) {
    return Form::Isolated;
  }
  if (cls == JoiningClass::RightJoining) joins_next = false;
  if (joins_previous && joins_next) return Form::Medial;
  if (joins_next) return Form::Initial;
  if (joins_previous) return Form::Final;
  return Form::Isolated;
}

/// One glyph per input code point, in logical order. Diacritics are skipped
/// when looking for a letter's neighbours and come out Isolated; any other
/// non-letter ends the current word.
std::vector<ShapedGlyph> shape(std::u32string_view text);

/// Replaces each directly adjacent lam + alif pair, where the lam joins
/// forward, by a single lam-alif glyph (U+FEFB isolated, U+FEFC final).
std::vector<ShapedGlyph> apply_ligatures(std::span<const ShapedGlyph> shaped);

/// shape() followed by apply_ligatures().
std::vector<ShapedGlyph> shape_text(std::u32string_view text);

/// Logical text recovered from shaper output (ligatures expanded).
std::u32string unshape(std::span<const ShapedGlyph> shaped);

/// Identifier printed for a glyph: repertoire name, "lamAlif", or "-".
std::string glyph_name(const ShapedGlyph& g);

/// `U+XXXX<TAB>name<TAB>Form` per glyph, newline terminated.
std::string format_debug(std::span<const ShapedGlyph> shaped);

}  // namespace sindhikit
