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

#include <string>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"

namespace lsk::textpipe {

struct TokenizerOptions {
  // Lowercased words after which a period never ends a sentence ("dl", "dr").
  std::vector<std::string> abbreviations;
  std::string id_prefix = "s";
};

// Rule-based input processor. Splits on whitespace, detaches leading and
// trailing punctuation one code point per token (internal hyphens and
// apostrophes stay attached), and ends a sentence after `.`, `?` or `!`
// when whitespace and an uppercase-initial token follow. Sentence ids are
// `<prefix><n>` numbered from `first_index`.
std::vector<Sentence> tokenize(std::string_view text, const TokenizerOptions& options = {},
                               std::size_t first_index = 1);

// Word-level split without sentence segmentation.
std::vector<std::string> tokenize_words(std::string_view text);

}  // namespace lsk::textpipe
