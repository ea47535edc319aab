#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sindhikit {

enum class DictionaryDirection { SindhiToEnglish, EnglishToSindhi };

std::string_view to_string(DictionaryDirection d);

/// Headword -> glosses, loaded from `headword<TAB>gloss` TSV. Repeated
/// headwords accumulate glosses in file order.
class Dictionary {
 public:
  struct Entry {
    std::string headword;
    std::vector<std::string> glosses;
  };

  /// Throws EncodingError for bad UTF-8 and ParseError (1-based line) for a
  /// line without a TAB, an empty headword, or a Sindhi headword containing
  /// Latin letters.
  static Dictionary load(std::string name, DictionaryDirection direction, std::string_view bytes);

  const std::string& name() const noexcept { return name_; }
  DictionaryDirection direction() const noexcept { return direction_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Exact match after yeh canonicalization (Sindhi headwords) or ASCII case
  /// folding (English headwords). Empty when absent.
  std::vector<std::string> lookup(std::string_view word) const;

  /// Headwords starting with `prefix`, ascending code-point order, at most
  /// `limit` of them. Throws std::invalid_argument when limit is 0.
  std::vector<std::string> prefix_search(std::string_view prefix, std::size_t limit) const;

  /// One `headword<TAB>gloss` line per gloss, entries in first-seen order.
  std::string serialize() const;

 private:
  Dictionary(std::string name, DictionaryDirection direction)
      : name_(std::move(name)), direction_(direction) {}

  std::string key_of(std::string_view word) const;

  std::string name_;
  DictionaryDirection direction_;
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> by_headword_;
  std::map<std::string, std::vector<std::string>> by_key_;
};

struct BuiltinDictionary {
  std::string_view name;
  DictionaryDirection direction;
  std::string_view tsv;
};

/// sindhi-english, english-sindhi, computer, medical, business.
const std::vector<BuiltinDictionary>& builtin_dictionary_sources();

}  // namespace sindhikit
