#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sindhikit/error.hpp"

namespace sindhikit {

enum class ControlKey { Backspace, Delete, Left, Right, Home, End, Enter };

std::string_view to_string(ControlKey k);
std::optional<ControlKey> parse_control_key(std::string_view key_id);

struct NoAction {
  friend bool operator==(NoAction, NoAction) { return true; }
};

struct InsertAction {
  char32_t code_point;
  friend bool operator==(InsertAction, InsertAction) = default;
};

using KeyAction = std::variant<NoAction, InsertAction, ControlKey>;

struct KeyBinding {
  std::string key_id;
  char32_t base;
  std::optional<char32_t> shifted;

  friend bool operator==(const KeyBinding&, const KeyBinding&) = default;
};

/// Raised by load_layout. Every kind maps to ErrorCode::Parse.
class LayoutError : public ParseError {
 public:
  enum class Kind { Syntax, DuplicateKey, NonScalar };

  LayoutError(Kind kind, const std::string& message, std::size_t line)
      : ParseError(message, line), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Key id of the fixed space-bar binding present in every layout.
inline constexpr std::string_view kSpaceKey = "Space";

class Layout {
 public:
  Layout(std::string name, std::vector<std::vector<KeyBinding>> rows);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::vector<KeyBinding>>& rows() const noexcept { return rows_; }

  const KeyBinding* find(std::string_view key_id) const;
  std::size_t key_count() const noexcept { return index_.size(); }

  /// Canonical layout-file text; load_layout(serialize()) reproduces *this.
  std::string serialize() const;

  friend bool operator==(const Layout& a, const Layout& b) {
    return a.name_ == b.name_ && a.rows_ == b.rows_;
  }

 private:
  std::string name_;
  std::vector<std::vector<KeyBinding>> rows_;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> index_;
};

/// Parses the layout file format:
///
///   key_id<TAB>U+XXXX[<TAB>U+YYYY]    binding (second code point = shifted)
///   ROW                               starts the next key row
///   # ...                             comment
///
/// Any error rejects the whole file.
Layout load_layout(std::string_view source, std::string name = "custom");

/// Table-order layout: every repertoire letter and sign, ten keys per row,
/// key ids k1, k2, ...
Layout generate_sequential_layout();

/// ["sequential", "standard"], parsed from the shipped assets.
const std::vector<Layout>& builtin_layouts();

/// Total: control keys and Space resolve the same in every layout; unmapped
/// keys give NoAction. Shift on a key without a shifted binding yields the
/// unshifted code point.
KeyAction translate_key(const Layout& layout, std::string_view key_id, bool shift);

}  // namespace sindhikit
