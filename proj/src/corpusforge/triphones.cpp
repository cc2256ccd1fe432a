// Copyright 2026 The lsk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsk/corpusforge/triphones.hpp"

#include <algorithm>
#include <cctype>

#include "lsk/common/error.hpp"
#include "lsk/common/ids.hpp"
#include "lsk/common/parallel.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/processors/model.hpp"
#include "lsk/textpipe/tokenizer.hpp"

namespace lsk::corpusforge {

void TriphoneTable::add(const Triphone& t, std::uint64_t n) {
  if (n == 0) return;
  counts_[t] += n;
  total_ += n;
  h_.reset();
}

void TriphoneTable::merge(const TriphoneTable& other) {
  for (const auto& [t, n] : other.counts_) add(t, n);
}

std::uint64_t TriphoneTable::count(const Triphone& t) const {
  auto it = counts_.find(t);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t TriphoneTable::h_index() const {
  if (!h_) {
    std::vector<std::uint64_t> c;
    c.reserve(counts_.size());
    for (const auto& [t, n] : counts_) c.push_back(n);
    h_ = corpusforge::h_index(std::move(c));
  }
  return *h_;
}

std::string TriphoneTable::to_tsv() const {
  std::string out;
  for (const auto& [t, n] : counts_) {
    out += t[0] + ' ' + t[1] + ' ' + t[2] + '\t' + std::to_string(n) + '\n';
  }
  return out;
}

std::uint64_t h_index(std::vector<std::uint64_t> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  std::uint64_t h = 0;
  while (h < counts.size() && counts[h] >= h + 1) ++h;
  return h;
}

std::vector<Triphone> sentence_triphones(std::span<const std::string> phones,
                                         const std::string& boundary) {
  std::vector<Triphone> out;
  if (phones.empty()) return out;
  std::vector<const std::string*> seq;
  seq.reserve(phones.size() + 2);
  seq.push_back(&boundary);
  for (const auto& p : phones) seq.push_back(&p);
  seq.push_back(&boundary);
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) out.push_back({*seq[i], *seq[i + 1], *seq[i + 2]});
  return out;
}

namespace {

bool phonetized(const CandidateSentence& s) { return s.phones && !s.phones->empty(); }

void skipped(const CandidateSentence& s, std::vector<std::string>* warnings) {
  if (warnings) warnings->push_back("sentence " + s.id + " has no phones, skipped");
}

}  // namespace

TriphoneTable triphone_histogram(std::span<const CandidateSentence> sentences,
                                 const std::string& boundary, std::vector<std::string>* warnings) {
  TriphoneTable table;
  for (const auto& s : sentences) {
    if (!phonetized(s)) {
      skipped(s, warnings);
      continue;
    }
    for (const auto& t : sentence_triphones(*s.phones, boundary)) table.add(t);
  }
  return table;
}

TriphoneTable triphone_histogram_parallel(std::span<const CandidateSentence> sentences, int jobs,
                                          const std::string& boundary,
                                          std::vector<std::string>* warnings) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(
                                                          sentences.size(), std::max(jobs, 1) * 4));
  std::vector<TriphoneTable> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t b = sentences.size() * c / chunks;
    const std::size_t e = sentences.size() * (c + 1) / chunks;
    for (std::size_t i = b; i < e; ++i) {
      if (!phonetized(sentences[i])) continue;
      for (const auto& t : sentence_triphones(*sentences[i].phones, boundary)) partial[c].add(t);
    }
  });
  // Chunks merge in index order; warnings come out in input order.
  TriphoneTable table;
  for (const auto& p : partial) table.merge(p);
  for (const auto& s : sentences) {
    if (!phonetized(s)) skipped(s, warnings);
  }
  return table;
}

std::vector<CandidateSentence> select_balanced(std::span<const CandidateSentence> sentences,
                                               const TriphoneTable& table,
                                               const BalanceParams& params) {
  const auto h = table.h_index();
  std::vector<CandidateSentence> kept;
  for (const auto& s : sentences) {
    if (!phonetized(s)) throw Error(Errc::kNoPhones, "sentence " + s.id + " has no phones");
    bool rare = false, all_frequent = true;
    for (const auto& t : sentence_triphones(*s.phones, params.boundary)) {
      const auto n = table.count(t);
      if (n < params.rare) rare = true;
      if (n <= h) all_frequent = false;
    }
    if (rare || !all_frequent) kept.push_back(s);
  }
  return kept;
}

bool id_less(const std::string& a, const std::string& b) { return natural_less(a, b); }

std::uint64_t rarity_key(std::span<const std::string> phones, const TriphoneTable& table,
                         const std::string& boundary) {
  std::uint64_t key = UINT64_MAX;
  for (const auto& t : sentence_triphones(phones, boundary)) key = std::min(key, table.count(t));
  return key;
}

std::vector<CandidateSentence> sort_rarity(std::span<const CandidateSentence> sentences,
                                           const TriphoneTable& table,
                                           const std::string& boundary) {
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  keyed.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    keyed.emplace_back(s.phones ? rarity_key(*s.phones, table, boundary) : UINT64_MAX, i);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return id_less(sentences[x.second].id, sentences[y.second].id);
  });
  std::vector<CandidateSentence> out;
  out.reserve(keyed.size());
  for (const auto& [k, i] : keyed) out.push_back(sentences[i]);
  return out;
}

std::optional<std::vector<std::string>> phonetize(std::span<const std::string> tokens,
                                                  const Lexicon& lexicon,
                                                  const processors::TaskModel* lts,
                                                  std::string* unknown) {
  std::vector<std::string> phones;
  textpipe::Sentence oov;
  std::vector<std::size_t> oov_at;  // insertion points into `phones`
  for (const auto& tok : tokens) {
    if (utf8::is_punctuation_token(tok)) continue;
    if (const auto* p = lexicon.pronunciation(tok)) {
      phones.insert(phones.end(), p->begin(), p->end());
      continue;
    }
    if (!lts) {
      if (unknown) *unknown = tok;
      return std::nullopt;
    }
    textpipe::Token t;
    t.wordform = utf8::casefold(tok);
    oov.tokens.push_back(std::move(t));
    oov_at.push_back(phones.size());
  }
  if (oov.tokens.empty()) return phones;
  processors::apply_processor(*lts, oov);
  std::vector<std::string> merged;
  std::size_t from = 0;
  for (std::size_t k = 0; k < oov_at.size(); ++k) {
    merged.insert(merged.end(), phones.begin() + from, phones.begin() + oov_at[k]);
    from = oov_at[k];
    const auto& tr = oov.tokens[k].transcription;
    if (!tr || tr->empty()) {
      if (unknown) *unknown = oov.tokens[k].wordform;
      return std::nullopt;
    }
    merged.insert(merged.end(), tr->begin(), tr->end());
  }
  merged.insert(merged.end(), phones.begin() + from, phones.end());
  return merged;
}

std::vector<std::string> phonetize_all(std::span<CandidateSentence> sentences,
                                       const Lexicon& lexicon, const processors::TaskModel* lts,
                                       int jobs) {
  parallel_for(sentences.size(), jobs, [&](std::size_t i) {
    auto& s = sentences[i];
    if (s.tokens.empty()) s.tokens = textpipe::tokenize_words(s.raw);
    s.phones = phonetize(s.tokens, lexicon, lts);
  });
  std::vector<std::string> failed;
  for (const auto& s : sentences) {
    if (!s.phones) failed.push_back(s.id);
  }
  return failed;
}

}  // namespace lsk::corpusforge
