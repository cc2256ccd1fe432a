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

#include "lsk/textpipe/token.hpp"

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::textpipe {

std::string_view attribute_name(Attribute a) noexcept {
  switch (a) {
    case Attribute::kWordform: return "wordform";
    case Attribute::kLemma: return "lemma";
    case Attribute::kPos: return "pos";
    case Attribute::kTranscription: return "transcription";
    case Attribute::kSyllables: return "syllables";
    case Attribute::kStress: return "stress";
    case Attribute::kChunk: return "chunk";
    case Attribute::kDependency: return "dependency";
  }
  return "?";
}

bool Token::has(Attribute a) const {
  switch (a) {
    case Attribute::kWordform: return !wordform.empty();
    case Attribute::kLemma: return lemma.has_value();
    case Attribute::kPos: return pos.has_value();
    case Attribute::kTranscription: return transcription.has_value();
    case Attribute::kSyllables: return syllables.has_value();
    case Attribute::kStress: return stress.has_value();
    case Attribute::kChunk: return chunk.has_value();
    case Attribute::kDependency: return dep_head.has_value();
  }
  return false;
}

bool is_punctuation(const Token& t) { return utf8::is_punctuation_token(t.wordform); }

std::vector<std::string> syllable_texts(const Token& t) {
  std::vector<std::string> out;
  if (!t.syllables) return out;
  const auto cps = utf8::decode(t.wordform);
  for (const auto& s : *t.syllables) {
    out.push_back(utf8::encode(std::u32string_view(cps).substr(s.begin, s.end - s.begin)));
  }
  return out;
}

std::optional<std::vector<Span>> spans_from_parts(std::string_view word,
                                                  const std::vector<std::string>& parts) {
  std::vector<Span> spans;
  std::string joined;
  std::size_t at = 0;
  for (const auto& p : parts) {
    const auto n = utf8::length(p);
    if (n == 0) return std::nullopt;
    spans.push_back({at, at + n});
    at += n;
    joined += p;
  }
  if (joined != word) return std::nullopt;
  return spans;
}

void validate(const Sentence& s) {
  const auto n = s.tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = s.tokens[i];
    const auto where = s.id + " token " + std::to_string(i + 1);
    if (t.wordform.empty()) throw Error(Errc::kInvalidArgument, where + ": empty wordform");
    if (t.syllables) {
      std::size_t at = 0;
      for (const auto& sp : *t.syllables) {
        if (sp.begin != at || sp.end <= sp.begin) {
          throw Error(Errc::kInvalidArgument, where + ": syllables do not partition the word");
        }
        at = sp.end;
      }
      if (at != utf8::length(t.wordform)) {
        throw Error(Errc::kInvalidArgument, where + ": syllables do not cover the word");
      }
    }
    if (t.stress && (!t.syllables || *t.stress >= t.syllables->size())) {
      throw Error(Errc::kInvalidArgument, where + ": stress outside syllables");
    }
    if (t.dep_head && (*t.dep_head > n || *t.dep_head == i + 1)) {
      throw Error(Errc::kInvalidArgument, where + ": bad dependency head");
    }
  }
}

}  // namespace lsk::textpipe
