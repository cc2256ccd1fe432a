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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"

namespace lsk::textpipe {

// Token-per-line format, columns:
//   wordform lemma pos chunk head label transcription syllables stress
// Missing attributes render as `_`; transcription phonemes are space
// separated; syllables are the syllable strings joined by `|`. Sentences
// are separated by one blank line.
inline constexpr std::size_t kTsvColumns = 9;

std::string format_tsv(std::span<const Sentence> sentences);
std::string format_tsv_row(const Token& t);

// Reads the same format back (used for gold training corpora). Sentence ids
// are assigned `s1`, `s2`, ...; raw text is the space-joined wordforms.
// Malformed rows throw E_TSV_FORMAT with the line number.
std::vector<Sentence> read_tsv(std::string_view text);

}  // namespace lsk::textpipe
