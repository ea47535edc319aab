#include "sindhikit/charset.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "sindhikit/error.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {
namespace {

constexpr auto L = Category::Letter;
constexpr auto S = Category::Sign;
constexpr auto M = Category::Diacritic;
constexpr auto D = JoiningClass::Dual;
constexpr auto R = JoiningClass::RightJoining;
constexpr auto U = JoiningClass::NonJoining;
constexpr auto T = JoiningClass::Transparent;
constexpr auto RTL = Direction::RTL;

// Joining classes follow ArabicShaping.txt; tests cross-check them against ICU.
constexpr std::array<CharInfo, kTableEntryCount + 8> kRepertoire{{
    {0x0622, "alifMadA", L, R, RTL},
    {0x0627, "alif", L, R, RTL},
    {0x0628, "beh", L, D, RTL},
    {0x067B, "beeh", L, D, RTL},
    {0x067E, "peh", L, D, RTL},
    {0x0680, "beheh", L, D, RTL},
    {0x062A, "the", L, D, RTL},
    {0x067F, "theh", L, D, RTL},
    {0x067D, "mytheey", L, D, RTL},
    {0x067A, "ttheeh", L, D, RTL},
    {0x062B, "ttay", L, D, RTL},
    {0x062C, "jeem", L, D, RTL},
    {0x0684, "dyeh", L, D, RTL},
    {0x0683, "nyeh", L, D, RTL},
    {0x0686, "cheh", L, D, RTL},
    {0x0687, "cheheh", L, D, RTL},
    {0x062D, "hah", L, D, RTL},
    {0x062E, "khay", L, D, RTL},
    {0x062F, "dal", L, R, RTL},
    {0x068C, "dahal", L, R, RTL},
    {0x068F, "dhal", L, R, RTL},
    {0x068A, "ddal", L, R, RTL},
    {0x068D, "ddahal", L, R, RTL},
    {0x0630, "zal", L, R, RTL},
    {0x0631, "reh", L, R, RTL},
    {0x0699, "rdeh", L, R, RTL},
    {0x0632, "zeh", L, R, RTL},
    {0x0633, "seen", L, D, RTL},
    {0x0634, "sheen", L, D, RTL},
    {0x0635, "swad", L, D, RTL},
    {0x0636, "dad", L, D, RTL},
    {0x0637, "toye", L, D, RTL},
    {0x0638, "zoye", L, D, RTL},
    {0x0639, "aieen", L, D, RTL},
    {0x063A, "ghain", L, D, RTL},
    {0x0641, "feh", L, D, RTL},
    {0x06A6, "peheh", L, D, RTL},
    {0x0642, "qaf", L, D, RTL},
    {0x06AA, "kaf", L, D, RTL},
    {0x06A9, "keheh", L, D, RTL},
    {0x06AF, "gaf", L, D, RTL},
    {0x06B3, "geuh", L, D, RTL},
    {0x06B1, "ngoeh", L, D, RTL},
    {0x0644, "lam", L, D, RTL},
    {0x0645, "meem", L, D, RTL},
    {0x0646, "noon", L, D, RTL},
    {0x06BB, "rnoon", L, D, RTL},
    {0x0648, "waw", L, R, RTL},
    {0x06BE, "heh", L, D, RTL},
    {0x0621, "hamza", L, U, RTL},
    {0x064A, "yeh", L, D, RTL},
    {0x06C1, "yehSmall", L, D, RTL},
    {0x0626, "yehHamza", L, D, RTL},
    {0x06FE, "min", S, U, RTL},
    {0x06FD, "sindhiAmpersand", S, U, RTL},
    // Harakat.
    {0x064B, "tanweenZaber", M, T, RTL},
    {0x064C, "tanweenPeush", M, T, RTL},
    {0x064D, "tanweenZeer", M, T, RTL},
    {0x064E, "zaber", M, T, RTL},
    {0x064F, "peush", M, T, RTL},
    {0x0650, "zeer", M, T, RTL},
    {0x0651, "shad", M, T, RTL},
    {0x0652, "jazm", M, T, RTL},
}};

struct Index {
  std::unordered_map<char32_t, std::size_t> by_code_point;
  std::unordered_map<std::string_view, std::size_t> by_name;

  Index() {
    for (std::size_t i = 0; i < kRepertoire.size(); ++i) {
      by_code_point.emplace(kRepertoire[i].code_point, i);
      by_name.emplace(kRepertoire[i].name, i);
    }
  }
};

const Index& index() {
  static const Index idx;
  return idx;
}

struct FoldEntry {
  char32_t from;
  unsigned short offset;
  unsigned char length;
};

#include "presentation_forms.inc"

constexpr bool is_ascii_letter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

template <typename E, std::size_t N>
std::optional<E> parse_enum(std::string_view s, const std::array<E, N>& values) {
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

}  // namespace

std::span<const CharInfo> repertoire() { return kRepertoire; }

std::optional<CharInfo> lookup(char32_t cp) {
  const auto& idx = index().by_code_point;
  if (auto it = idx.find(cp); it != idx.end()) return kRepertoire[it->second];
  return std::nullopt;
}

std::optional<CharInfo> lookup_name(std::string_view name) {
  const auto& idx = index().by_name;
  if (auto it = idx.find(name); it != idx.end()) return kRepertoire[it->second];
  return std::nullopt;
}

Classification classify(char32_t cp) {
  if (auto info = lookup(cp)) return {info->category, info->direction};
  if (is_ascii_letter(cp)) return {Category::Other, Direction::LTR};
  if ((cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669)) {
    return {Category::Other, Direction::Digit};
  }
  return {Category::Other, Direction::Neutral};
}

JoiningClass joining_class(char32_t cp) {
  if (auto info = lookup(cp)) return info->joining;
  return JoiningClass::NonJoining;
}

bool is_letter(char32_t cp) {
  auto info = lookup(cp);
  return info && info->category == Category::Letter;
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Letter: return "Letter";
    case Category::Sign: return "Sign";
    case Category::Diacritic: return "Diacritic";
    case Category::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(JoiningClass j) {
  switch (j) {
    case JoiningClass::Dual: return "Dual";
    case JoiningClass::RightJoining: return "RightJoining";
    case JoiningClass::NonJoining: return "NonJoining";
    case JoiningClass::Transparent: return "Transparent";
  }
  return "NonJoining";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::RTL: return "RTL";
    case Direction::LTR: return "LTR";
    case Direction::Digit: return "Digit";
    case Direction::Neutral: return "Neutral";
  }
  return "Neutral";
}

std::optional<Category> parse_category(std::string_view s) {
  return parse_enum(s, std::array{Category::Letter, Category::Sign, Category::Diacritic,
                                  Category::Other});
}

std::optional<JoiningClass> parse_joining_class(std::string_view s) {
  return parse_enum(s, std::array{JoiningClass::Dual, JoiningClass::RightJoining,
                                  JoiningClass::NonJoining, JoiningClass::Transparent});
}

std::optional<Direction> parse_direction(std::string_view s) {
  return parse_enum(
      s, std::array{Direction::RTL, Direction::LTR, Direction::Digit, Direction::Neutral});
}

bool is_presentation_form(char32_t cp) {
  return !presentation_form_decomposition(cp).empty();
}

std::u32string_view presentation_form_decomposition(char32_t cp) {
  if (cp < 0xFB50 || cp > 0xFEFF) return {};
  const auto* end = std::end(kFoldTable);
  const auto* it = std::lower_bound(std::begin(kFoldTable), end, cp,
                                    [](const FoldEntry& e, char32_t v) { return e.from < v; });
  if (it == end || it->from != cp) return {};
  return {kFoldPool + it->offset, it->length};
}

std::u32string canonicalize(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (auto decomposed = presentation_form_decomposition(cp); !decomposed.empty()) {
      for (char32_t part : decomposed) out.push_back(canonical_yeh(part));
    } else {
      out.push_back(canonical_yeh(cp));
    }
  }
  return out;
}

std::string export_repertoire_tsv() {
  std::string out;
  for (const auto& info : kRepertoire) {
    out += unicode::format_code_point(info.code_point);
    out += '\t';
    out += info.name;
    out += '\t';
    out += to_string(info.category);
    out += '\t';
    out += to_string(info.joining);
    out += '\t';
    out += to_string(info.direction);
    out += '\n';
  }
  return out;
}

std::vector<RepertoireRow> parse_repertoire_tsv(std::string_view tsv) {
  std::vector<RepertoireRow> rows;
  std::size_t line_no = 0;
  while (!tsv.empty()) {
    ++line_no;
    const auto eol = tsv.find('\n');
    std::string_view line = tsv.substr(0, eol);
    tsv = eol == std::string_view::npos ? std::string_view{} : tsv.substr(eol + 1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    while (true) {
      const auto tab = line.find('\t');
      fields.push_back(line.substr(0, tab));
      if (tab == std::string_view::npos) break;
      line.remove_prefix(tab + 1);
    }
    if (fields.size() != 5) throw ParseError("expected 5 tab-separated fields", line_no);
    const auto cp = unicode::parse_code_point(fields[0]);
    if (!cp || !unicode::is_scalar(*cp)) throw ParseError("bad code point", line_no);
    const auto cat = parse_category(fields[2]);
    const auto join = parse_joining_class(fields[3]);
    const auto dir = parse_direction(fields[4]);
    if (fields[1].empty() || !cat || !join || !dir) throw ParseError("bad field value", line_no);
    rows.push_back({static_cast<char32_t>(*cp), std::string(fields[1]), *cat, *join, *dir});
  }
  return rows;
}

}  // namespace sindhikit
