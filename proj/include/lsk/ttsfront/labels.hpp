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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"

namespace lsk::ttsfront {

inline constexpr std::uint64_t kFrequentSyllableThreshold = 5;

struct SyllableFreqTable {
  std::map<std::string, std::uint64_t> counts;  // casefolded syllable text
  std::uint64_t threshold = kFrequentSyllableThreshold;

  std::uint64_t count(std::string_view syllable) const;
  bool frequent(std::string_view syllable) const;  // count >= threshold
};

// Counts every syllable of every word token. A word token without syllables
// is E_GOLD_MISSING.
SyllableFreqTable syllable_freq_table(std::span<const textpipe::Sentence> corpus,
                                      std::uint64_t threshold = kFrequentSyllableThreshold);

class ArticulatoryMap {
 public:
  struct Entry {
    std::string cls, place, manner, voicing;
    bool operator==(const Entry&) const = default;
  };

  // The built-in description of the default inventory.
  static ArticulatoryMap defaults();
  // `phone<TAB>class<TAB>place<TAB>manner<TAB>voicing` rows override or
  // extend the defaults. Throws E_CORPUS_FORMAT on a short row.
  static ArticulatoryMap parse(std::string_view text);

  void set(const std::string& phone, Entry e) { entries_[phone] = std::move(e); }
  // Unknown phones (and the sentinel) are "x" in every field.
  Entry lookup(std::string_view phone) const;

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

struct LabelOptions {
  bool state_level = false;
  int states = 5;
  std::string silence = "pau";  // inserted at sentence edges and for punctuation
};

struct ContextLabel {
  std::string phone;
  std::vector<std::string> features;  // KEY=value, fixed category order
  int state = 0;                      // 1..states in state mode, 0 otherwise

  // Feature tokens joined by '/', plus `S=<state>` in state mode.
  std::string render() const;
  bool operator==(const ContextLabel&) const = default;
};

// Percent-escapes '%', '/', '=' and whitespace so a value is a valid token
// part.
std::string escape_value(std::string_view value);

// Phone sequence with silences, as used for the labels.
std::vector<std::string> label_phones(const textpipe::Sentence& sentence,
                                      const LabelOptions& options = {});

// One label per phone (times `states` in state mode). Throws
// E_STAGE_DEPENDENCY when a word token lacks transcription, syllables,
// stress, pos or chunk.
std::vector<ContextLabel> build_labels(const textpipe::Sentence& sentence,
                                       const SyllableFreqTable& syllables,
                                       const ArticulatoryMap& articulation,
                                       const LabelOptions& options = {});

std::vector<std::vector<ContextLabel>> build_labels_all(
    std::span<const textpipe::Sentence> corpus, const SyllableFreqTable& syllables,
    const ArticulatoryMap& articulation, const LabelOptions& options, int jobs = 1);

// One rendered label per line; utterances separated by a blank line.
std::string label_file(std::span<const std::vector<ContextLabel>> utterances);
// Inverse of label_file for rendered lines: feature tokens per label.
std::vector<std::vector<std::vector<std::string>>> read_label_file(std::string_view text);

}  // namespace lsk::ttsfront
