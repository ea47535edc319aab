#include "sindhikit/input.hpp"

#include <array>

#include "assets.hpp"
#include "sindhikit/charset.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {
namespace {

constexpr std::array kControlKeys{ControlKey::Backspace, ControlKey::Delete, ControlKey::Left,
                                  ControlKey::Right,     ControlKey::Home,   ControlKey::End,
                                  ControlKey::Enter};

constexpr std::size_t kSequentialRowWidth = 10;

bool is_reserved_key(std::string_view key_id) {
  return key_id == kSpaceKey || key_id == "ROW" || parse_control_key(key_id).has_value();
}

char32_t parse_binding_code_point(std::string_view token, std::size_t line) {
  const auto value = unicode::parse_code_point(token);
  if (!value) {
    throw LayoutError(LayoutError::Kind::Syntax, "malformed code point '" + std::string(token) + "'",
                      line);
  }
  if (!unicode::is_scalar(*value)) {
    throw LayoutError(LayoutError::Kind::NonScalar,
                      std::string(token) + " is not a Unicode scalar value", line);
  }
  const auto cp = static_cast<char32_t>(*value);
  if (classify(cp).direction == Direction::LTR) {
    throw LayoutError(LayoutError::Kind::Syntax,
                      std::string(token) + " is outside the insertable set", line);
  }
  return cp;
}

}  // namespace

std::string_view to_string(ControlKey k) {
  switch (k) {
    case ControlKey::Backspace: return "Backspace";
    case ControlKey::Delete: return "Delete";
    case ControlKey::Left: return "Left";
    case ControlKey::Right: return "Right";
    case ControlKey::Home: return "Home";
    case ControlKey::End: return "End";
    case ControlKey::Enter: return "Enter";
  }
  return "Enter";
}

std::optional<ControlKey> parse_control_key(std::string_view key_id) {
  for (ControlKey k : kControlKeys) {
    if (to_string(k) == key_id) return k;
  }
  return std::nullopt;
}

Layout::Layout(std::string name, std::vector<std::vector<KeyBinding>> rows)
    : name_(std::move(name)), rows_(std::move(rows)) {
  if (rows_.empty()) rows_.emplace_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      index_.emplace(rows_[r][c].key_id, std::pair{r, c});
    }
  }
}

const KeyBinding* Layout::find(std::string_view key_id) const {
  auto it = index_.find(std::string(key_id));
  if (it == index_.end()) return nullptr;
  return &rows_[it->second.first][it->second.second];
}

std::string Layout::serialize() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += "ROW\n";
    for (const auto& key : rows_[r]) {
      out += key.key_id;
      out += '\t';
      out += unicode::format_code_point(key.base);
      if (key.shifted) {
        out += '\t';
        out += unicode::format_code_point(*key.shifted);
      }
      out += '\n';
    }
  }
  return out;
}

Layout load_layout(std::string_view source, std::string name) {
  std::vector<std::vector<KeyBinding>> rows(1);
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  while (!source.empty()) {
    ++line_no;
    const auto eol = source.find('\n');
    std::string_view line = source.substr(0, eol);
    source = eol == std::string_view::npos ? std::string_view{} : source.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line == "ROW") {
      rows.emplace_back();
      continue;
    }

    std::vector<std::string_view> fields;
    while (true) {
      const auto tab = line.find('\t');
      fields.push_back(line.substr(0, tab));
      if (tab == std::string_view::npos) break;
      line.remove_prefix(tab + 1);
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw LayoutError(LayoutError::Kind::Syntax, "expected key_id<TAB>U+XXXX[<TAB>U+YYYY]",
                        line_no);
    }
    const std::string key_id(fields[0]);
    if (key_id.empty()) throw LayoutError(LayoutError::Kind::Syntax, "empty key id", line_no);
    if (is_reserved_key(key_id)) {
      throw LayoutError(LayoutError::Kind::Syntax, "key id '" + key_id + "' is reserved", line_no);
    }
    if (auto [it, inserted] = seen.emplace(key_id, line_no); !inserted) {
      throw LayoutError(LayoutError::Kind::DuplicateKey,
                        "duplicate key '" + key_id + "' (first bound on line " +
                            std::to_string(it->second) + ")",
                        line_no);
    }
    KeyBinding binding{key_id, parse_binding_code_point(fields[1], line_no), std::nullopt};
    if (fields.size() == 3) binding.shifted = parse_binding_code_point(fields[2], line_no);
    rows.back().push_back(std::move(binding));
  }
  return Layout(std::move(name), std::move(rows));
}

Layout generate_sequential_layout() {
  std::vector<std::vector<KeyBinding>> rows;
  std::size_t n = 0;
  for (const auto& info : repertoire()) {
    if (info.category == Category::Diacritic) continue;
    if (n % kSequentialRowWidth == 0) rows.emplace_back();
    ++n;
    rows.back().push_back({"k" + std::to_string(n), info.code_point, std::nullopt});
  }
  return Layout("sequential", std::move(rows));
}

const std::vector<Layout>& builtin_layouts() {
  static const std::vector<Layout> layouts{
      load_layout(assets::kSequentialLayout, "sequential"),
      load_layout(assets::kStandardLayout, "standard"),
  };
  return layouts;
}

KeyAction translate_key(const Layout& layout, std::string_view key_id, bool shift) {
  if (auto control = parse_control_key(key_id)) return *control;
  if (key_id == kSpaceKey) return InsertAction{U' '};
  const KeyBinding* binding = layout.find(key_id);
  if (!binding) return NoAction{};
  if (shift && binding->shifted) return InsertAction{*binding->shifted};
  return InsertAction{binding->base};
}

}  // namespace sindhikit
