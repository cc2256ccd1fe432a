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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lsk::textpipe {

// Half-open range of code point offsets into a wordform.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

// Standard token attributes; a stage owns the attributes it produces.
enum class Attribute {
  kWordform,
  kLemma,
  kPos,
  kTranscription,
  kSyllables,
  kStress,
  kChunk,
  kDependency,
};

std::string_view attribute_name(Attribute a) noexcept;

struct Token {
  std::string wordform;
  std::optional<std::string> lemma;
  std::optional<std::string> pos;
  std::optional<std::vector<std::string>> transcription;
  std::optional<std::vector<Span>> syllables;
  std::optional<std::size_t> stress;  // 0-based syllable index
  std::optional<std::string> chunk;   // BIO tag
  std::optional<std::size_t> dep_head;  // 0 = artificial root, else 1-based token index
  std::optional<std::string> dep_label;
  std::map<std::string, std::string> custom;

  bool has(Attribute a) const;
  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
  bool operator==(const Sentence&) const = default;
};

bool is_punctuation(const Token& t);
std::vector<std::string> syllable_texts(const Token& t);
// Spans covering `parts` laid end to end; empty if their concatenation is not `word`.
std::optional<std::vector<Span>> spans_from_parts(std::string_view word,
                                                  const std::vector<std::string>& parts);

// Checks the Token/Sentence invariants; throws E_INVALID_ARGUMENT naming the
// offending token.
void validate(const Sentence& s);

}  // namespace lsk::textpipe
