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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsk/queryservice/index.hpp"
#include "lsk/queryservice/query.hpp"

namespace lsk::queryservice {

inline constexpr std::size_t kContextTokens = 8;

struct Hit {
  std::string utterance;
  std::size_t start = 0;  // token indices, end exclusive
  std::size_t end = 0;
  std::vector<CorpusToken> tokens;
  std::vector<CorpusToken> left;   // up to kContextTokens before the match
  std::vector<CorpusToken> right;  // up to kContextTokens after it
  std::string audio_file;
  // Absolute times (audio offset applied) when both edge tokens are aligned.
  std::optional<std::int64_t> start_ms;
  std::optional<std::int64_t> end_ms;
  bool operator==(const Hit&) const = default;
};

struct SearchResult {
  std::size_t total = 0;  // hits before pagination
  std::vector<Hit> hits;
};

// Every start where pattern i matches token start + i, ordered by
// (utterance id, start), then paginated. Validates the query first.
SearchResult search(const IndexedCorpus& index, const Query& query);

Hit make_hit(const CorpusUtterance& u, std::size_t start, std::size_t end);

}  // namespace lsk::queryservice
