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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/corpusforge/lexicon.hpp"

namespace lsk::corpusforge {

struct CleaningConfig {
  std::size_t max_words = 20;
  std::vector<std::string> forbidden_chars = {"½", "●", "¾", "○", "(", ")", "[", "]", "{", "}",
                                              "<", ">", "/", "\\", "|", "\"", "„", "”", "“",
                                              "«", "»"};
  std::vector<std::string> forbidden_substrings = {"Sos.", "Cal.", ".ro", "uk.", "www.", "http"};
  const Lexicon* lexicon = nullptr;
  // Rules f..i consult the lexicon; switching this off skips g and h and
  // makes f reject every sentence under three words.
  bool use_lexicon = true;
  double lexicon_coverage = 0.90;
  double diacritics = 0.90;
  std::vector<std::string> prefixes = {"re", "ne", "pre", "dez", "semi", "supra", "sub",
                                       "auto", "anti", "bine"};
  bool correct = true;  // rule i

  // Throws E_INVALID_ARGUMENT for out-of-range thresholds, E_NO_LEXICON when
  // lexicon rules are on without a lexicon.
  void validate() const;
};

struct AuditEntry {
  std::string id;
  char rule = 0;  // 'a'..'i'
  std::string evidence;
  bool operator==(const AuditEntry&) const = default;
};

struct CandidateSentence {
  std::string id;
  std::string raw;
  std::vector<std::string> tokens;
  std::optional<std::vector<std::string>> phones;
  std::optional<char> rejection;
};

struct CleanResult {
  std::vector<CandidateSentence> kept;
  std::vector<CandidateSentence> rejected;
  // One row per rejection plus one per rule-i correction, in input order.
  std::vector<AuditEntry> audit;
};

inline constexpr std::string_view kRejectRules = "abcdefgh";

// Evidence when `rule` (one of kRejectRules) rejects `raw` on its own,
// regardless of the other rules.
std::optional<std::string> rule_verdict(char rule, std::string_view raw,
                                        const CleaningConfig& config);

// First rule among a..h that rejects the sentence, with its evidence.
// `tokens` is filled from the trimmed text.
std::optional<AuditEntry> first_rejection(CandidateSentence& s, const CleaningConfig& config);

CleanResult clean(std::span<const CandidateSentence> sentences, const CleaningConfig& config);
CleanResult clean_parallel(std::span<const CandidateSentence> sentences,
                           const CleaningConfig& config, int jobs);

// Rewrites old-orthography î as â inside a word. Initial and final î stay;
// an î right after a listed prefix at the start of the word stays.
std::string correct_diacritics(std::string_view word, const Lexicon* lexicon,
                               std::span<const std::string> prefixes);

// One candidate per non-empty line, ids "1", "2", ... by line number.
std::vector<CandidateSentence> read_lines(std::string_view text);
std::string audit_tsv(std::span<const AuditEntry> audit);

}  // namespace lsk::corpusforge
