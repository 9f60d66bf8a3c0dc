#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lexalign/lang.hpp"
#include "lexalign/strings.hpp"

namespace lexalign {

// Stopwords for one language. Entries are normalized exactly like tokenizer
// output so membership checks line up with tokenize().
struct StopwordList {
  LanguageId lang;
  StringSet words;

  StopwordList() = default;
  explicit StopwordList(LanguageId l) : lang(std::move(l)) {}

  static StopwordList of(LanguageId lang, std::initializer_list<std::string_view> entries);

  // One token per line, UTF-8.
  static StopwordList load(const std::string& path, LanguageId lang);

  bool contains(std::string_view w) const { return words.find(w) != words.end(); }
  bool empty() const { return words.empty(); }
};

// NFC-normalizes and lowercases a string without splitting it. Surrounding
// whitespace is trimmed.
std::string normalize_word(std::string_view text);

// Splits text into lowercase NFC-normalized tokens. Whitespace and
// punctuation act as delimiters, so punctuation-only tokens cannot occur;
// stopwords are dropped and token order is preserved. Empty input yields an
// empty sequence.
std::vector<std::string> tokenize(std::string_view text, const StopwordList& stops);
std::vector<std::string> tokenize(std::string_view text);

}  // namespace lexalign
