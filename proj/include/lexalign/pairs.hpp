#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexalign/dictionary.hpp"
#include "lexalign/lang.hpp"
#include "lexalign/vocab.hpp"

namespace lexalign {

enum class PairTier { Strong, DirectInduced, IndirectInduced };
enum class PairScope { Monolingual, Bilingual };

std::string_view tier_name(PairTier tier);
PairTier parse_tier(std::string_view name);

struct PairKind {
  PairTier tier = PairTier::Strong;
  PairScope scope = PairScope::Bilingual;

  bool operator==(const PairKind&) const = default;
};

// A typed word pair with explicit languages, used at API boundaries
// (exclusion lists, negative sampling).
struct WordPair {
  std::string left_word;
  LanguageId left_lang;
  std::string right_word;
  LanguageId right_lang;

  bool operator==(const WordPair&) const = default;
};

// A deduplicated set of word pairs of one kind over one language pair.
// Bilingual pairs are stored oriented as (left_lang word, right_lang word);
// monolingual pairs are unordered and canonicalized as (min, max), with
// self-pairs rejected.
class PairSet {
 public:
  using Pair = std::pair<std::string, std::string>;

  PairSet(PairKind kind, LanguageId left_lang, LanguageId right_lang);

  const PairKind& kind() const { return kind_; }
  const LanguageId& left_lang() const { return left_lang_; }
  const LanguageId& right_lang() const { return right_lang_; }
  bool monolingual() const { return kind_.scope == PairScope::Monolingual; }

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::set<Pair>& pairs() const { return pairs_; }

  // Returns false when the pair was already present (or is a rejected
  // monolingual self-pair).
  bool insert(std::string_view left, std::string_view right);
  bool contains(std::string_view left, std::string_view right) const;
  void erase(std::string_view left, std::string_view right);

  // Membership irrespective of orientation; languages must match this set's
  // pair in one order or the other.
  bool contains_pair(const WordPair& pair) const;

  // Same pairs with orientation flipped (a no-op for monolingual sets).
  PairSet swapped() const;

 private:
  Pair canonical(std::string_view left, std::string_view right) const;

  PairKind kind_;
  LanguageId left_lang_;
  LanguageId right_lang_;
  std::set<Pair> pairs_;
};

struct PairStatistics {
  std::uint64_t n_definitions = 0;
  std::uint64_t n_strong = 0;
  std::uint64_t n_direct = 0;
  std::uint64_t n_indirect = 0;

  bool operator==(const PairStatistics&) const = default;
};

// Pairs of words that appear in each other's definitions. For the
// monolingual case pass the same dictionary twice; self-pairs are excluded.
// Preconditions: d_ij.word_lang == d_ji.def_lang and d_ij.def_lang ==
// d_ji.word_lang, else LanguageMismatchError.
PairSet extract_strong_pairs(const Dictionary& d_ij, const Dictionary& d_ji);

// Pairs (w_i, w_j) connected by a pivot word: (w_i, pivot) is a monolingual
// strong pair and (pivot, w_j) a bilingual strong pair. Pairs already in
// bi_ij are dropped so tiers stay disjoint.
PairSet induce_direct_pairs(const PairSet& mono_i, const PairSet& bi_ij);

// Pairs (w_i, w_j) connected by a pivot bilingual strong pair (p_i, p_j)
// with (w_i, p_i) and (w_j, p_j) monolingual strong. Pairs already strong or
// directly induced (either pivot side) are dropped.
PairSet induce_indirect_pairs(const PairSet& mono_i, const PairSet& mono_j,
                              const PairSet& bi_ij);

// pairs \ banned, with banned membership checked in both orientations.
PairSet exclude_pairs(const PairSet& pairs, const std::vector<WordPair>& banned);

// Drops pairs whose words fall outside the capped vocabularies.
PairSet restrict_to_vocabulary(const PairSet& pairs, const Vocabulary& left,
                               const Vocabulary& right);

// Tier cardinalities plus total merged entries across the bilingual
// dictionaries in `dicts`.
PairStatistics pair_statistics(const PairSet& strong, const PairSet& direct,
                               const PairSet& indirect,
                               const std::vector<const Dictionary*>& dicts);

// TSV with columns left_word, left_lang, right_word, right_lang, tier.
void write_pairs_tsv(const std::string& path, const PairSet& pairs);
PairSet read_pairs_tsv(const std::string& path, PairKind kind, const LanguageId& left_lang,
                       const LanguageId& right_lang);

}  // namespace lexalign
