#include "lexalign/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>

#include "lexalign/errors.hpp"

namespace lexalign {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr) {
    throw Error("ICU NFC normalizer unavailable");
  }
  return *n;
}

icu::UnicodeString normalized_lower(std::string_view text) {
  icu::UnicodeString raw = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(raw, ec);
  if (U_FAILURE(ec)) throw DataError("unicode normalization failed");
  // Root locale keeps case folding language-independent and deterministic.
  out.toLower(icu::Locale::getRoot());
  return out;
}

bool is_token_char(UChar32 c) {
  if (u_isalnum(c)) return true;
  const std::int8_t t = u_charType(c);
  return t == U_NON_SPACING_MARK || t == U_COMBINING_SPACING_MARK || t == U_ENCLOSING_MARK;
}

}  // namespace

StopwordList StopwordList::of(LanguageId lang, std::initializer_list<std::string_view> entries) {
  StopwordList list(std::move(lang));
  for (const auto& e : entries) {
    std::string w = normalize_word(e);
    if (!w.empty()) list.words.insert(std::move(w));
  }
  return list;
}

StopwordList StopwordList::load(const std::string& path, LanguageId lang) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stopword file: " + path);
  StopwordList list(std::move(lang));
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      strip_bom(line);
      first = false;
    }
    strip_cr(line);
    std::string w = normalize_word(line);
    if (!w.empty()) list.words.insert(std::move(w));
  }
  return list;
}

std::string normalize_word(std::string_view text) {
  icu::UnicodeString s = normalized_lower(text);
  int32_t begin = 0;
  int32_t end = s.length();
  while (begin < end) {
    UChar32 c = s.char32At(begin);
    if (!u_isUWhiteSpace(c) && c != 0xFEFF) break;
    begin += U16_LENGTH(c);
  }
  while (end > begin) {
    // char32At resolves a trail surrogate to its full code point.
    UChar32 c = s.char32At(end - 1);
    if (!u_isUWhiteSpace(c) && c != 0xFEFF) break;
    end -= U16_LENGTH(c);
  }
  std::string out;
  s.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

std::vector<std::string> tokenize(std::string_view text, const StopwordList& stops) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;

  const icu::UnicodeString s = normalized_lower(text);
  icu::UnicodeString current;
  auto flush = [&]() {
    if (current.isEmpty()) return;
    std::string token;
    current.toUTF8String(token);
    current.remove();
    if (!stops.contains(token)) tokens.push_back(std::move(token));
  };

  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    if (is_token_char(c)) {
      current.append(c);
    } else {
      flush();
    }
    i += U16_LENGTH(c);
  }
  flush();
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  static const StopwordList empty_stops;
  return tokenize(text, empty_stops);
}

}  // namespace lexalign
