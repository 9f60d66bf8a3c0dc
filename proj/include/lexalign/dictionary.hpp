#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lexalign/lang.hpp"
#include "lexalign/strings.hpp"
#include "lexalign/text.hpp"

namespace lexalign {

// One merged dictionary entry: a headword and the union of its definition
// tokens across all senses. Membership is set-based; per-token counts are
// kept only for reporting.
struct DictionaryEntry {
  std::string headword;
  std::map<std::string, std::uint32_t> definition_tokens;

  bool defines(std::string_view token) const {
    return definition_tokens.find(std::string(token)) != definition_tokens.end();
  }

  std::size_t distinct_tokens() const { return definition_tokens.size(); }
};

// Definitions of words in `word_lang`, written in `def_lang`. At most one
// merged entry per headword; monolingual iff the two languages are equal.
class Dictionary {
 public:
  Dictionary(LanguageId word_lang, LanguageId def_lang)
      : word_lang_(std::move(word_lang)), def_lang_(std::move(def_lang)) {}

  const LanguageId& word_lang() const { return word_lang_; }
  const LanguageId& def_lang() const { return def_lang_; }
  bool monolingual() const { return word_lang_ == def_lang_; }
  std::size_t size() const { return entries_.size(); }

  // Merges `definition_tokens` into the entry for `headword` (token-set
  // union; counts accumulate). The headword is case/NFC-normalized; tokens
  // are expected to be tokenizer output already.
  void add(std::string_view headword, const std::vector<std::string>& definition_tokens);

  const DictionaryEntry* find(std::string_view headword) const {
    auto it = entries_.find(headword);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const StringMap<DictionaryEntry>& entries() const { return entries_; }

  std::vector<std::string> headwords_sorted() const;

 private:
  LanguageId word_lang_;
  LanguageId def_lang_;
  StringMap<DictionaryEntry> entries_;
};

// Loads a UTF-8 JSON-lines dictionary. Each line is an object with string
// fields `word`, `word_lang`, `def_lang` and `definition` (raw text, will be
// tokenized with `stops`). Repeated headwords merge by token-set union.
Dictionary load_dictionary(const std::string& path, const LanguageId& word_lang,
                           const LanguageId& def_lang, const StopwordList& stops);

}  // namespace lexalign
