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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/queryservice/corpus.hpp"

namespace lsk::queryservice {

inline constexpr std::size_t kMaxLimit = 1000;
inline constexpr std::size_t kDefaultLimit = 20;

// Constraints on one token; all present ones must hold.
struct TokenPattern {
  std::optional<std::string> word;   // casefolded, exact
  std::optional<std::string> lemma;  // casefolded, exact
  std::optional<std::string> pos;    // anchored glob: '*' any run, '.' one character
  bool operator==(const TokenPattern&) const = default;

  bool matches(const CorpusToken& t) const;
};

struct Query {
  std::vector<TokenPattern> patterns;
  std::size_t limit = kDefaultLimit;
  std::size_t offset = 0;

  // E_QUERY_EMPTY without patterns or with an empty pattern, E_QUERY_LIMIT
  // above kMaxLimit.
  void validate() const;
};

// `[word="mere"]`, `[lemma="măr" pos="Nc*"]`, sequences by juxtaposition.
// Values are double-quoted with \" and \\ escapes. E_QUERY_EMPTY for `[]` or
// blank text; E_QUERY_SYNTAX with the 1-based column (in characters).
Query parse_query(std::string_view text);

// Anchored glob over code points.
bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace lsk::queryservice
