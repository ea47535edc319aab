#include "sindhikit/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

#include "assets.hpp"
#include "sindhikit/charset.hpp"
#include "sindhikit/error.hpp"
#include "sindhikit/unicode.hpp"

namespace sindhikit {
namespace {

std::string fold_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string canonical_utf8(std::string_view s) {
  return unicode::encode_utf8(canonicalize(unicode::decode_utf8(s)));
}

bool has_latin_letter(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  });
}

}  // namespace

std::string_view to_string(DictionaryDirection d) {
  return d == DictionaryDirection::SindhiToEnglish ? "SindhiToEnglish" : "EnglishToSindhi";
}

std::string Dictionary::key_of(std::string_view word) const {
  if (direction_ == DictionaryDirection::EnglishToSindhi) return fold_ascii(word);
  try {
    return canonical_utf8(word);
  } catch (const EncodingError&) {
    return std::string(word);
  }
}

Dictionary Dictionary::load(std::string name, DictionaryDirection direction,
                            std::string_view bytes) {
  unicode::decode_utf8(bytes);  // validates, reporting the byte offset

  Dictionary dict(std::move(name), direction);
  const bool sindhi_headwords = direction == DictionaryDirection::SindhiToEnglish;
  std::size_t line_no = 0;
  while (!bytes.empty()) {
    ++line_no;
    const auto eol = bytes.find('\n');
    std::string_view line = bytes.substr(0, eol);
    bytes = eol == std::string_view::npos ? std::string_view{} : bytes.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("missing TAB separator", line_no);
    std::string_view head = line.substr(0, tab);
    std::string_view gloss_raw = line.substr(tab + 1);
    if (head.empty()) throw ParseError("empty headword", line_no);
    if (sindhi_headwords && has_latin_letter(head)) {
      throw ParseError("Sindhi headword contains Latin letters", line_no);
    }

    std::string headword = sindhi_headwords ? canonical_utf8(head) : std::string(head);
    std::string gloss = sindhi_headwords ? std::string(gloss_raw) : canonical_utf8(gloss_raw);

    dict.by_key_[dict.key_of(headword)].push_back(gloss);
    auto [it, inserted] = dict.by_headword_.emplace(headword, dict.entries_.size());
    if (inserted) dict.entries_.push_back({std::move(headword), {}});
    dict.entries_[it->second].glosses.push_back(std::move(gloss));
  }
  return dict;
}

std::vector<std::string> Dictionary::lookup(std::string_view word) const {
  auto it = by_key_.find(key_of(word));
  if (it == by_key_.end()) return {};
  return it->second;
}

std::vector<std::string> Dictionary::prefix_search(std::string_view prefix,
                                                   std::size_t limit) const {
  if (limit == 0) throw std::invalid_argument("prefix_search limit must be at least 1");
  const std::string p = key_of(prefix);
  std::vector<std::string> out;
  // by_headword_ is ordered by UTF-8 bytes, which is code-point order.
  for (const auto& [headword, idx] : by_headword_) {
    if (key_of(headword).starts_with(p)) {
      out.push_back(headword);
      if (out.size() == limit) break;
    }
  }
  return out;
}

std::string Dictionary::serialize() const {
  std::string out;
  for (const auto& entry : entries_) {
    for (const auto& gloss : entry.glosses) {
      out += entry.headword;
      out += '\t';
      out += gloss;
      out += '\n';
    }
  }
  return out;
}

const std::vector<BuiltinDictionary>& builtin_dictionary_sources() {
  static const std::vector<BuiltinDictionary> sources{
      {"sindhi-english", DictionaryDirection::SindhiToEnglish, assets::kSindhiEnglishDictionary},
      {"english-sindhi", DictionaryDirection::EnglishToSindhi, assets::kEnglishSindhiDictionary},
      {"computer", DictionaryDirection::SindhiToEnglish, assets::kComputerDictionary},
      {"medical", DictionaryDirection::SindhiToEnglish, assets::kMedicalDictionary},
      {"business", DictionaryDirection::SindhiToEnglish, assets::kBusinessDictionary},
  };
  return sources;
}

}  // namespace sindhikit
