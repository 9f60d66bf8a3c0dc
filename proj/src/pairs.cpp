#include "lexalign/pairs.hpp"

#include <algorithm>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lexalign/errors.hpp"

namespace lexalign {

std::string_view tier_name(PairTier tier) {
  switch (tier) {
    case PairTier::Strong: return "strong";
    case PairTier::DirectInduced: return "direct";
    case PairTier::IndirectInduced: return "indirect";
  }
  return "strong";
}

PairTier parse_tier(std::string_view name) {
  if (name == "strong") return PairTier::Strong;
  if (name == "direct") return PairTier::DirectInduced;
  if (name == "indirect") return PairTier::IndirectInduced;
  throw DataError("unknown pair tier: " + std::string(name));
}

PairSet::PairSet(PairKind kind, LanguageId left_lang, LanguageId right_lang)
    : kind_(kind), left_lang_(std::move(left_lang)), right_lang_(std::move(right_lang)) {
  const bool mono = left_lang_ == right_lang_;
  if (mono != (kind_.scope == PairScope::Monolingual)) {
    throw KindMismatchError("pair scope does not match the language pair");
  }
  if (mono && kind_.tier != PairTier::Strong) {
    throw KindMismatchError("induced pairs are bilingual only");
  }
}

PairSet::Pair PairSet::canonical(std::string_view left, std::string_view right) const {
  if (monolingual() && right < left) {
    return {std::string(right), std::string(left)};
  }
  return {std::string(left), std::string(right)};
}

bool PairSet::insert(std::string_view left, std::string_view right) {
  if (monolingual() && left == right) return false;
  return pairs_.insert(canonical(left, right)).second;
}

bool PairSet::contains(std::string_view left, std::string_view right) const {
  return pairs_.find(canonical(left, right)) != pairs_.end();
}

void PairSet::erase(std::string_view left, std::string_view right) {
  pairs_.erase(canonical(left, right));
}

bool PairSet::contains_pair(const WordPair& pair) const {
  if (pair.left_lang == left_lang_ && pair.right_lang == right_lang_ &&
      contains(pair.left_word, pair.right_word)) {
    return true;
  }
  if (pair.left_lang == right_lang_ && pair.right_lang == left_lang_ &&
      contains(pair.right_word, pair.left_word)) {
    return true;
  }
  return false;
}

PairSet PairSet::swapped() const {
  if (monolingual()) return *this;
  PairSet out(kind_, right_lang_, left_lang_);
  for (const auto& [l, r] : pairs_) out.insert(r, l);
  return out;
}

namespace {

void require_strong_mono(const PairSet& set, const LanguageId& lang, const char* role) {
  if (set.kind().tier != PairTier::Strong || set.kind().scope != PairScope::Monolingual) {
    throw KindMismatchError(std::string(role) + " must be a monolingual strong pair set");
  }
  if (set.left_lang() != lang) {
    throw LanguageMismatchError(std::string(role) + " is over language '" +
                                set.left_lang().code + "', expected '" + lang.code + "'");
  }
}

void require_strong_bilingual(const PairSet& set, const char* role) {
  if (set.kind().tier != PairTier::Strong || set.kind().scope != PairScope::Bilingual) {
    throw KindMismatchError(std::string(role) + " must be a bilingual strong pair set");
  }
}

// word -> all partners across the (symmetric) monolingual pair set.
StringMap<std::vector<std::string>> partner_index(const PairSet& mono) {
  StringMap<std::vector<std::string>> index;
  for (const auto& [a, b] : mono.pairs()) {
    index[a].push_back(b);
    index[b].push_back(a);
  }
  return index;
}

// Runs `body(i, local)` over [0, n) in parallel, then merges the
// thread-local pair buffers into `out`. Set semantics keep the result
// identical to a single-threaded run.
template <typename Body>
void parallel_collect(std::size_t n, PairSet& out, const Body& body) {
  std::vector<std::vector<PairSet::Pair>> locals;
#ifdef _OPENMP
  #pragma omp parallel
  {
    #pragma omp single
    locals.resize(static_cast<std::size_t>(omp_get_num_threads()));
    auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
    #pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i), local);
    }
  }
#else
  locals.resize(1);
  for (std::size_t i = 0; i < n; ++i) body(i, locals[0]);
#endif
  for (const auto& local : locals) {
    for (const auto& [l, r] : local) out.insert(l, r);
  }
}

}  // namespace

PairSet extract_strong_pairs(const Dictionary& d_ij, const Dictionary& d_ji) {
  if (d_ij.word_lang() != d_ji.def_lang() || d_ij.def_lang() != d_ji.word_lang()) {
    throw LanguageMismatchError("dictionaries do not form a language pair: (" +
                                d_ij.word_lang().code + "->" + d_ij.def_lang().code + ") vs (" +
                                d_ji.word_lang().code + "->" + d_ji.def_lang().code + ")");
  }
  const bool mono = d_ij.monolingual();
  PairSet out({PairTier::Strong, mono ? PairScope::Monolingual : PairScope::Bilingual},
              d_ij.word_lang(), d_ij.def_lang());

  const std::vector<std::string> headwords = d_ij.headwords_sorted();
  parallel_collect(headwords.size(), out, [&](std::size_t i, std::vector<PairSet::Pair>& local) {
    const DictionaryEntry* entry = d_ij.find(headwords[i]);
    for (const auto& [token, count] : entry->definition_tokens) {
      if (mono && token == entry->headword) continue;
      const DictionaryEntry* reverse = d_ji.find(token);
      if (reverse != nullptr && reverse->defines(entry->headword)) {
        local.emplace_back(entry->headword, token);
      }
    }
  });
  return out;
}

PairSet induce_direct_pairs(const PairSet& mono_i, const PairSet& bi_ij) {
  require_strong_bilingual(bi_ij, "bi_ij");
  require_strong_mono(mono_i, bi_ij.left_lang(), "mono_i");

  PairSet out({PairTier::DirectInduced, PairScope::Bilingual}, bi_ij.left_lang(),
              bi_ij.right_lang());
  const auto partners = partner_index(mono_i);
  const std::vector<PairSet::Pair> bi(bi_ij.pairs().begin(), bi_ij.pairs().end());

  parallel_collect(bi.size(), out, [&](std::size_t i, std::vector<PairSet::Pair>& local) {
    const auto& [pivot, w_j] = bi[i];
    auto it = partners.find(pivot);
    if (it == partners.end()) return;
    for (const auto& w_i : it->second) {
      if (!bi_ij.contains(w_i, w_j)) local.emplace_back(w_i, w_j);
    }
  });
  return out;
}

PairSet induce_indirect_pairs(const PairSet& mono_i, const PairSet& mono_j,
                              const PairSet& bi_ij) {
  require_strong_bilingual(bi_ij, "bi_ij");
  require_strong_mono(mono_i, bi_ij.left_lang(), "mono_i");
  require_strong_mono(mono_j, bi_ij.right_lang(), "mono_j");

  // Full direct-induced union over both pivot sides, used for disjointness.
  PairSet direct = induce_direct_pairs(mono_i, bi_ij);
  {
    const PairSet direct_ji = induce_direct_pairs(mono_j, bi_ij.swapped());
    for (const auto& [r, l] : direct_ji.pairs()) direct.insert(l, r);
  }

  PairSet out({PairTier::IndirectInduced, PairScope::Bilingual}, bi_ij.left_lang(),
              bi_ij.right_lang());
  const auto partners_i = partner_index(mono_i);
  const auto partners_j = partner_index(mono_j);
  const std::vector<PairSet::Pair> bi(bi_ij.pairs().begin(), bi_ij.pairs().end());

  parallel_collect(bi.size(), out, [&](std::size_t i, std::vector<PairSet::Pair>& local) {
    const auto& [pivot_i, pivot_j] = bi[i];
    auto it_i = partners_i.find(pivot_i);
    auto it_j = partners_j.find(pivot_j);
    if (it_i == partners_i.end() || it_j == partners_j.end()) return;
    for (const auto& w_i : it_i->second) {
      for (const auto& w_j : it_j->second) {
        if (!bi_ij.contains(w_i, w_j) && !direct.contains(w_i, w_j)) {
          local.emplace_back(w_i, w_j);
        }
      }
    }
  });
  return out;
}

PairSet exclude_pairs(const PairSet& pairs, const std::vector<WordPair>& banned) {
  PairSet out = pairs;
  for (const auto& wp : banned) {
    if (wp.left_lang == out.left_lang() && wp.right_lang == out.right_lang()) {
      out.erase(wp.left_word, wp.right_word);
    }
    if (wp.left_lang == out.right_lang() && wp.right_lang == out.left_lang()) {
      out.erase(wp.right_word, wp.left_word);
    }
  }
  return out;
}

PairSet restrict_to_vocabulary(const PairSet& pairs, const Vocabulary& left,
                               const Vocabulary& right) {
  PairSet out(pairs.kind(), pairs.left_lang(), pairs.right_lang());
  for (const auto& [l, r] : pairs.pairs()) {
    if (left.contains(l) && right.contains(r)) out.insert(l, r);
  }
  return out;
}

PairStatistics pair_statistics(const PairSet& strong, const PairSet& direct,
                               const PairSet& indirect,
                               const std::vector<const Dictionary*>& dicts) {
  for (const PairSet* set : {&direct, &indirect}) {
    if (set->left_lang() != strong.left_lang() || set->right_lang() != strong.right_lang()) {
      throw LanguageMismatchError("pair statistics require sets over one language pair");
    }
  }
  PairStatistics stats;
  stats.n_strong = strong.size();
  stats.n_direct = direct.size();
  stats.n_indirect = indirect.size();
  for (const Dictionary* d : dicts) {
    if (d != nullptr && !d->monolingual()) stats.n_definitions += d->size();
  }
  return stats;
}

void write_pairs_tsv(const std::string& path, const PairSet& pairs) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write pair file: " + path);
  const std::string_view tier = tier_name(pairs.kind().tier);
  for (const auto& [l, r] : pairs.pairs()) {
    out << l << '\t' << pairs.left_lang().code << '\t' << r << '\t'
        << pairs.right_lang().code << '\t' << tier << '\n';
  }
  if (!out) throw DataError("failed writing pair file: " + path);
}

PairSet read_pairs_tsv(const std::string& path, PairKind kind, const LanguageId& left_lang,
                       const LanguageId& right_lang) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open pair file: " + path);

  PairSet out(kind, left_lang, right_lang);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) strip_bom(line);
    strip_cr(line);
    if (line.empty()) continue;

    std::array<std::string, 5> cols;
    std::size_t start = 0;
    std::size_t col = 0;
    for (; col < cols.size(); ++col) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols[col] = line.substr(start);
        start = line.size() + 1;
        ++col;
        break;
      }
      cols[col] = line.substr(start, tab - start);
      start = tab + 1;
    }
    if (col != cols.size() || start <= line.size()) {
      throw ParseError(path, lineno, "expected 5 tab-separated columns");
    }
    if (cols[1] != left_lang.code || cols[3] != right_lang.code) {
      throw LanguageMismatchError(path + ":" + std::to_string(lineno) +
                                  ": unexpected language tags");
    }
    if (parse_tier(cols[4]) != kind.tier) {
      throw ParseError(path, lineno, "unexpected pair tier");
    }
    out.insert(cols[0], cols[2]);
  }
  return out;
}

}  // namespace lexalign
