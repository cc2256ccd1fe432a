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

#include "lsk/learners/feature.hpp"
#include "lsk/textpipe/token.hpp"

namespace lsk::processors {

using learners::FeatureVector;
using textpipe::Sentence;

inline constexpr std::string_view kRoot = "__ROOT__";
inline constexpr int kCharWindow = 3;

// tag.v1: w-2..w+2 (casefolded), s1..s4 suffixes, p1..p2 prefixes, cap, dig,
// t-1 and t-2 (tags of the previous tokens, as given in `prev_tags`).
FeatureVector tagger_features(const Sentence& s, std::size_t i,
                              const std::vector<std::string>& prev_tags);
// lemma.v1: w0, s1..s4, pos.
FeatureVector lemma_features(const Sentence& s, std::size_t i);
// chunk.v1: p-2..p+2, w-1..w+1.
FeatureVector chunk_features(const Sentence& s, std::size_t i);
// syllabify.v1 and lts.v1: casefolded characters c-3..c+3 around `i`.
FeatureVector char_window(const std::u32string& chars, std::size_t i);
// stress.v1 for syllable `i` of `syllables`: syl, vow, ord, rord, nsyl.
FeatureVector stress_features(const std::vector<std::string>& syllables, std::size_t i);

// Suffix rewrite: drop `strip` trailing code points, then append `append`.
struct LemmaRule {
  std::size_t strip = 0;
  std::string append;

  std::string label() const;  // "strip:append"
  static LemmaRule from_label(std::string_view label);
  // The identity when the rule does not fit the word.
  std::string apply(std::string_view word) const;
  bool operator==(const LemmaRule&) const = default;
};
// Longest common prefix of word and lemma defines the rule.
LemmaRule induce_rule(std::string_view word, std::string_view lemma);

// Assigns 0..2 phones to each character of `word` (casefolded code points)
// by a minimum-cost alignment; the last character absorbs any overflow.
// Returns one phone group per character.
std::vector<std::vector<std::string>> align_letters(const std::u32string& word,
                                                    const std::vector<std::string>& phones);
// Class label for a phone group: phones joined by '+', "-" for none.
std::string phone_group_label(const std::vector<std::string>& group);
std::vector<std::string> phone_group_from_label(std::string_view label);

}  // namespace lsk::processors
