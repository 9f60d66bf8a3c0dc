#include "lexalign/vocab.hpp"

#include <algorithm>
#include <numeric>

#include "lexalign/errors.hpp"

namespace lexalign {

Vocabulary Vocabulary::from_tokens(LanguageId lang, const std::vector<std::string>& tokens,
                                   std::size_t cap, const StopwordList& stops) {
  StringMap<std::uint64_t> counts;
  for (const auto& t : tokens) counts[t]++;
  return from_counts(std::move(lang), counts, cap, stops);
}

Vocabulary Vocabulary::from_counts(LanguageId lang, const StringMap<std::uint64_t>& counts,
                                   std::size_t cap, const StopwordList& stops) {
  std::vector<std::pair<std::string_view, std::uint64_t>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [word, count] : counts) {
    if (word.empty() || stops.contains(word)) continue;
    ranked.emplace_back(word, count);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > cap) ranked.resize(cap);

  Vocabulary v;
  v.lang_ = std::move(lang);
  v.cap_ = cap;
  v.words_.reserve(ranked.size());
  v.freq_.reserve(ranked.size());
  for (std::uint32_t i = 0; i < ranked.size(); ++i) {
    v.words_.emplace_back(ranked[i].first);
    v.freq_.push_back(ranked[i].second);
    v.ids_.emplace(v.words_.back(), i);
  }
  return v;
}

Vocabulary Vocabulary::from_words(LanguageId lang, std::vector<std::string> words) {
  Vocabulary v;
  v.lang_ = std::move(lang);
  v.cap_ = words.size();
  v.words_ = std::move(words);
  v.freq_.assign(v.words_.size(), 0);
  for (std::uint32_t i = 0; i < v.words_.size(); ++i) {
    if (!v.ids_.emplace(v.words_[i], i).second) {
      throw DataError("duplicate word in vocabulary: " + v.words_[i]);
    }
  }
  return v;
}

std::uint64_t Vocabulary::total_count() const {
  return std::accumulate(freq_.begin(), freq_.end(), std::uint64_t{0});
}

}  // namespace lexalign
