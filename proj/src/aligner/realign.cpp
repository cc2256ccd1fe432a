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

#include "lsk/aligner/realign.hpp"

#include <algorithm>

#include "lsk/common/parallel.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::aligner {

bool normalized_match(std::string_view a, std::string_view b) {
  const auto fa = utf8::casefold(a), fb = utf8::casefold(b);
  return fa == fb || utf8::strip_diacritics(fa) == utf8::strip_diacritics(fb);
}

int gap_cost(std::string_view item) { return utf8::is_punctuation_token(item) ? 0 : 1; }

int pair_cost(std::string_view a, std::string_view b) { return normalized_match(a, b) ? 0 : 1; }

Realignment realign(std::span<const std::string> tokens, std::span<const std::string> words) {
  const std::size_t n = tokens.size(), m = words.size();
  const std::size_t w = m + 1;
  std::vector<int> d((n + 1) * w, 0);
  std::vector<int> tok_gap(n), word_gap(m);
  for (std::size_t i = 0; i < n; ++i) tok_gap[i] = gap_cost(tokens[i]);
  for (std::size_t j = 0; j < m; ++j) word_gap[j] = gap_cost(words[j]);
  // pair costs are needed twice (fill and traceback)
  std::vector<std::uint8_t> sub(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub[i * m + j] = pair_cost(tokens[i], words[j]);
  }
  for (std::size_t i = 1; i <= n; ++i) d[i * w] = d[(i - 1) * w] + tok_gap[i - 1];
  for (std::size_t j = 1; j <= m; ++j) d[j] = d[j - 1] + word_gap[j - 1];
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i * w + j] = std::min({d[(i - 1) * w + j - 1] + sub[(i - 1) * m + j - 1],
                               d[(i - 1) * w + j] + tok_gap[i - 1],
                               d[i * w + j - 1] + word_gap[j - 1]});
    }
  }

  Realignment out;
  out.cost = d[n * w + m];
  out.word_of_token.assign(n, std::nullopt);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const int here = d[i * w + j];
    if (i > 0 && j > 0 && here == d[(i - 1) * w + j - 1] + sub[(i - 1) * m + j - 1]) {
      const bool match = sub[(i - 1) * m + j - 1] == 0;
      out.steps.push_back({match ? EditOp::kMatch : EditOp::kSubstitute, i - 1, j - 1});
      if (match) out.word_of_token[i - 1] = j - 1;
      --i;
      --j;
    } else if (i > 0 && here == d[(i - 1) * w + j] + tok_gap[i - 1]) {
      out.steps.push_back({EditOp::kDelete, i - 1, std::nullopt});
      --i;
    } else {
      out.steps.push_back({EditOp::kInsert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  out.spans.assign(n, std::nullopt);
  return out;
}

std::optional<TimeSpan> word_span(const AlignedWord& w) {
  if (w.segments.empty()) return std::nullopt;
  return TimeSpan{w.segments.front().start_ms, w.segments.back().end_ms};
}

Realignment realign(std::span<const std::string> tokens, std::span<const AlignedWord> words) {
  std::vector<std::string> surfaces;
  surfaces.reserve(words.size());
  for (const auto& w : words) surfaces.push_back(w.surface);
  auto r = realign(tokens, std::span<const std::string>(surfaces));
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (r.word_of_token[t]) r.spans[t] = word_span(words[*r.word_of_token[t]]);
  }
  return r;
}

void realign_all(std::span<AlignedUtterance> utterances, int jobs) {
  parallel_for(utterances.size(), jobs, [&](std::size_t k) {
    auto& u = utterances[k];
    u.token_spans = realign(u.tokens, std::span<const AlignedWord>(u.words)).spans;
  });
}

}  // namespace lsk::aligner
