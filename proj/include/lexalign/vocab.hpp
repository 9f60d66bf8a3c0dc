#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexalign/lang.hpp"
#include "lexalign/strings.hpp"
#include "lexalign/text.hpp"

namespace lexalign {

inline constexpr std::size_t kDefaultVocabCap = 200000;

// Frequency-ranked vocabulary capped at `cap` words. Ids are dense and
// assigned in rank order: higher count first, ties broken by lexicographic
// order of the surface form, so construction is deterministic.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Keeps the `cap` most frequent non-stopword tokens of a token stream.
  static Vocabulary from_tokens(LanguageId lang, const std::vector<std::string>& tokens,
                                std::size_t cap, const StopwordList& stops);

  static Vocabulary from_counts(LanguageId lang, const StringMap<std::uint64_t>& counts,
                                std::size_t cap, const StopwordList& stops);

  // Rank-ordered words with no frequency information (e.g. read back from an
  // embedding file). Duplicate words are rejected.
  static Vocabulary from_words(LanguageId lang, std::vector<std::string> words);

  std::size_t size() const { return words_.size(); }
  std::size_t cap() const { return cap_; }
  const LanguageId& lang() const { return lang_; }

  std::optional<std::uint32_t> id(std::string_view word) const {
    auto it = ids_.find(word);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(std::string_view word) const { return ids_.find(word) != ids_.end(); }

  const std::string& word(std::uint32_t id) const { return words_.at(id); }
  std::uint64_t frequency(std::uint32_t id) const { return freq_.at(id); }
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::uint64_t>& frequencies() const { return freq_; }

  // Total corpus tokens covered by the vocabulary.
  std::uint64_t total_count() const;

 private:
  LanguageId lang_;
  std::vector<std::string> words_;
  std::vector<std::uint64_t> freq_;
  StringMap<std::uint32_t> ids_;
  std::size_t cap_ = kDefaultVocabCap;
};

}  // namespace lexalign
