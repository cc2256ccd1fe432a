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

#include "lsk/queryservice/search.hpp"

#include <algorithm>

namespace lsk::queryservice {

namespace {

bool has_wildcard(std::string_view p) { return p.find_first_of("*.") != std::string_view::npos; }

// Positions of tokens that can satisfy `p`, sorted. `owned` holds merged
// lists for wildcard POS patterns.
std::span<const Position> candidates(const IndexedCorpus& index, const TokenPattern& p,
                                     std::vector<Position>& owned) {
  auto lookup = [](const Postings& m, std::string_view key) -> std::span<const Position> {
    const auto it = m.find(key);
    return it == m.end() ? std::span<const Position>{} : std::span<const Position>(it->second);
  };
  if (p.word) return lookup(index.words(), *p.word);
  if (p.lemma) return lookup(index.lemmas(), *p.lemma);
  if (!has_wildcard(*p.pos)) return lookup(index.pos(), *p.pos);
  owned.clear();
  for (const auto& [key, list] : index.pos()) {
    if (glob_match(*p.pos, key)) owned.insert(owned.end(), list.begin(), list.end());
  }
  std::sort(owned.begin(), owned.end());
  return owned;
}

std::size_t candidate_bound(const IndexedCorpus& index, const TokenPattern& p) {
  std::vector<Position> scratch;
  if (p.word || p.lemma || !has_wildcard(*p.pos)) return candidates(index, p, scratch).size();
  std::size_t n = 0;
  for (const auto& [key, list] : index.pos()) {
    if (glob_match(*p.pos, key)) n += list.size();
  }
  return n;
}

}  // namespace

Hit make_hit(const CorpusUtterance& u, std::size_t start, std::size_t end) {
  Hit h;
  h.utterance = u.id;
  h.start = start;
  h.end = end;
  h.tokens.assign(u.tokens.begin() + start, u.tokens.begin() + end);
  h.left.assign(u.tokens.begin() + (start > kContextTokens ? start - kContextTokens : 0),
                u.tokens.begin() + start);
  h.right.assign(u.tokens.begin() + end,
                 u.tokens.begin() + std::min(u.tokens.size(), end + kContextTokens));
  h.audio_file = u.audio_file;
  const auto& first = u.tokens[start].span;
  const auto& last = u.tokens[end - 1].span;
  if (first && last) {
    h.start_ms = u.audio_offset_ms + first->start_ms;
    h.end_ms = u.audio_offset_ms + std::max(first->start_ms, last->end_ms);
  }
  return h;
}

SearchResult search(const IndexedCorpus& index, const Query& query) {
  query.validate();
  const auto& pats = query.patterns;
  std::size_t pivot = 0, best = SIZE_MAX;
  for (std::size_t k = 0; k < pats.size(); ++k) {
    const auto n = candidate_bound(index, pats[k]);
    if (n < best) best = n, pivot = k;
  }
  std::vector<Position> owned;
  const auto cands = candidates(index, pats[pivot], owned);

  std::vector<Position> starts;
  const auto& utts = index.utterances();
  for (const auto& c : cands) {
    if (c.token < pivot) continue;
    const std::size_t start = c.token - pivot;
    const auto& toks = utts[c.utterance].tokens;
    if (start + pats.size() > toks.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < pats.size() && ok; ++k) {
      ok = pats[k].matches(toks[start + k]);
    }
    if (ok) starts.push_back({c.utterance, static_cast<std::uint32_t>(start)});
  }

  SearchResult r;
  r.total = starts.size();
  const auto first = std::min(query.offset, starts.size());
  const auto last = std::min(starts.size(), first + query.limit);
  for (auto i = first; i < last; ++i) {
    const auto& u = utts[starts[i].utterance];
    r.hits.push_back(make_hit(u, starts[i].token, starts[i].token + pats.size()));
  }
  return r;
}

}  // namespace lsk::queryservice
