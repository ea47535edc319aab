#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sindhikit {

enum class Category { Letter, Sign, Diacritic, Other };
enum class JoiningClass { Dual, RightJoining, NonJoining, Transparent };
enum class Direction { RTL, LTR, Digit, Neutral };

/// One repertoire entry. `name` is the identifier used for the character
/// throughout the toolkit (CLI output, layouts, debug dumps).
struct CharInfo {
  char32_t code_point;
  std::string_view name;
  Category category;
  JoiningClass joining;
  Direction direction;

  friend bool operator==(const CharInfo&, const CharInfo&) = default;
};

struct Classification {
  Category category;
  Direction direction;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Number of leading repertoire entries that form the Sindhi character table
/// proper; the harakat follow them.
inline constexpr std::size_t kTableEntryCount = 55;

inline constexpr char32_t kYeh = 0x064A;
inline constexpr char32_t kFarsiYeh = 0x06CC;

/// Table entries in table order, followed by the diacritics.
std::span<const CharInfo> repertoire();

std::optional<CharInfo> lookup(char32_t cp);
std::optional<CharInfo> lookup_name(std::string_view name);

Classification classify(char32_t cp);
JoiningClass joining_class(char32_t cp);

/// True for repertoire entries of category Letter.
bool is_letter(char32_t cp);

std::string_view to_string(Category c);
std::string_view to_string(JoiningClass j);
std::string_view to_string(Direction d);
std::optional<Category> parse_category(std::string_view s);
std::optional<JoiningClass> parse_joining_class(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);

// Text canonicalization applied before anything enters a buffer or index.

constexpr char32_t canonical_yeh(char32_t cp) noexcept {
  return cp == kFarsiYeh ? kYeh : cp;
}

bool is_presentation_form(char32_t cp);

/// Compatibility decomposition of an Arabic presentation form; empty when
/// `cp` is not one.
std::u32string_view presentation_form_decomposition(char32_t cp);

/// Folds presentation forms to their base letters, then maps U+06CC to U+064A.
std::u32string canonicalize(std::u32string_view text);

// TSV export: U+XXXX<TAB>name<TAB>category<TAB>joining<TAB>direction.

struct RepertoireRow {
  char32_t code_point;
  std::string name;
  Category category;
  JoiningClass joining;
  Direction direction;

  friend bool operator==(const RepertoireRow&, const RepertoireRow&) = default;
};

std::string export_repertoire_tsv();
/// Throws ParseError on malformed rows.
std::vector<RepertoireRow> parse_repertoire_tsv(std::string_view tsv);

}  // namespace sindhikit
