#include "lexalign/dictionary.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "lexalign/errors.hpp"

namespace lexalign {

void Dictionary::add(std::string_view headword, const std::vector<std::string>& definition_tokens) {
  std::string key = normalize_word(headword);
  if (key.empty()) throw DataError("empty headword");
  auto [it, inserted] = entries_.try_emplace(key);
  if (inserted) it->second.headword = key;
  for (const auto& t : definition_tokens) {
    it->second.definition_tokens[t]++;
  }
}

std::vector<std::string> Dictionary::headwords_sorted() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [word, entry] : entries_) out.push_back(word);
  std::sort(out.begin(), out.end());
  return out;
}

Dictionary load_dictionary(const std::string& path, const LanguageId& word_lang,
                           const LanguageId& def_lang, const StopwordList& stops) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dictionary file: " + path);

  Dictionary dict(word_lang, def_lang);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) strip_bom(line);
    strip_cr(line);
    if (line.empty()) continue;

    const nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw ParseError(path, lineno, "invalid JSON object");
    }
    for (const char* field : {"word", "word_lang", "def_lang", "definition"}) {
      if (!obj.contains(field) || !obj[field].is_string()) {
        throw ParseError(path, lineno, std::string("missing string field '") + field + "'");
      }
    }
    if (obj["word_lang"].get<std::string>() != word_lang.code ||
        obj["def_lang"].get<std::string>() != def_lang.code) {
      throw LanguageMismatchError(path + ":" + std::to_string(lineno) +
                                  ": expected languages (" + word_lang.code + ", " +
                                  def_lang.code + "), got (" +
                                  obj["word_lang"].get<std::string>() + ", " +
                                  obj["def_lang"].get<std::string>() + ")");
    }

    const std::string headword = normalize_word(obj["word"].get<std::string>());
    if (headword.empty()) throw ParseError(path, lineno, "empty headword");
    dict.add(headword, tokenize(obj["definition"].get<std::string>(), stops));
  }
  return dict;
}

}  // namespace lexalign
