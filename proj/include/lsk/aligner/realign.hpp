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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/aligner/lab.hpp"

namespace lsk::aligner {

struct TimeSpan {
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;
  bool operator==(const TimeSpan&) const = default;
};

enum class EditOp : std::uint8_t { kMatch, kSubstitute, kDelete, kInsert };

struct AlignStep {
  EditOp op;
  std::optional<std::size_t> token;  // index into the token list
  std::optional<std::size_t> word;   // index into the aligned words
  bool operator==(const AlignStep&) const = default;
};

struct Realignment {
  int cost = 0;
  std::vector<AlignStep> steps;
  std::vector<std::optional<std::size_t>> word_of_token;  // set for matches only
  std::vector<std::optional<TimeSpan>> spans;
};

// Text equality after casefolding, or after casefolding and stripping
// diacritics.
bool normalized_match(std::string_view a, std::string_view b);
// Cost of leaving an item unpaired: 0 for punctuation, 1 otherwise.
int gap_cost(std::string_view item);
int pair_cost(std::string_view a, std::string_view b);

// Global edit-distance alignment of tokens against aligned word surfaces.
// Among minimal alignments, traceback from the end prefers a diagonal step
// (match or substitution), then deleting a token, then inserting a word.
Realignment realign(std::span<const std::string> tokens, std::span<const AlignedWord> words);
Realignment realign(std::span<const std::string> tokens, std::span<const std::string> words);

// Time covered by a word: first segment start to last segment end.
std::optional<TimeSpan> word_span(const AlignedWord& w);

struct AlignedUtterance {
  std::string id;
  std::string group;       // speaker or section, whatever the stats group by
  std::string audio_file;
  std::int64_t audio_offset_ms = 0;
  std::vector<PhonemeSegment> segments;
  std::vector<AlignedWord> words;
  std::vector<std::string> tokens;
  std::vector<std::optional<TimeSpan>> token_spans;  // filled by realign_all
};

// Realigns every utterance (tokens against words) in place.
void realign_all(std::span<AlignedUtterance> utterances, int jobs = 1);

}  // namespace lsk::aligner
