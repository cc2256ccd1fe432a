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

#include "lsk/aligner/realign.hpp"
#include "lsk/textpipe/token.hpp"

namespace lsk::queryservice {

struct CorpusToken {
  std::string word;
  std::string lemma;  // empty when not annotated
  std::string pos;
  std::optional<aligner::TimeSpan> span;  // relative to the utterance's audio offset
  bool operator==(const CorpusToken&) const = default;
};

// One time-aligned annotated utterance of the searchable corpus.
struct CorpusUtterance {
  std::string id;
  std::string group;
  std::string audio_file;  // empty when there is no audio
  std::int64_t audio_offset_ms = 0;
  std::vector<CorpusToken> tokens;
  bool operator==(const CorpusUtterance&) const = default;
};

// JSON Lines corpus, one utterance per line:
//   {"id":"u1","group":"spk1","audio":{"file":"u1.wav","offset_ms":0},
//    "tokens":[{"word":"Ana","lemma":"Ana","pos":"Np","start_ms":0,"end_ms":310}]}
// "group", "audio", "lemma", "pos" and the times are optional; start_ms and
// end_ms come together. Blank lines are skipped. E_CORPUS_FORMAT with the
// line number on anything else.
std::vector<CorpusUtterance> read_corpus_jsonl(std::string_view text);
std::string corpus_jsonl(std::span<const CorpusUtterance> utterances);
std::string utterance_json(const CorpusUtterance& u);
CorpusUtterance parse_utterance_json(std::string_view line);

// Joins an aligner result with its annotation: token i of `annotation` must
// be token i of the utterance (E_CORPUS_FORMAT otherwise). Without an
// annotation, lemma and pos stay empty.
CorpusUtterance from_aligned(const aligner::AlignedUtterance& u,
                             const textpipe::Sentence* annotation = nullptr);

}  // namespace lsk::queryservice
