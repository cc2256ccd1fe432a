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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "lsk/aligner/realign.hpp"

namespace lsk::aligner {

struct PhonemeTotals {
  std::uint64_t occurrences = 0;
  std::int64_t total_ms = 0;
  double mean_ms() const;
  // Mean rounded half-up to hundredths of a millisecond, e.g. "78.83".
  std::string mean_display() const;
  bool operator==(const PhonemeTotals&) const = default;
};

class PhonemeStats {
 public:
  void add(std::string_view phoneme, std::uint64_t occurrences, std::int64_t total_ms);
  void add(const PhonemeSegment& s) { add(s.phoneme, 1, s.duration_ms()); }
  void merge(const PhonemeStats& other);

  const std::map<std::string, PhonemeTotals>& phonemes() const { return phonemes_; }
  std::int64_t total_ms() const { return total_ms_; }
  double total_hours() const { return total_ms_ / 3'600'000.0; }
  bool operator==(const PhonemeStats&) const = default;

 private:
  std::map<std::string, PhonemeTotals> phonemes_;
  std::int64_t total_ms_ = 0;
};

// Hours as integer hundredths, rounded half-up (12.35 h -> 1235).
std::int64_t hours_hundredths(std::int64_t total_ms);
std::string hours_display(std::int64_t total_ms);

using GroupKey = std::function<std::string(const AlignedUtterance&)>;
GroupKey group_by_field();  // AlignedUtterance::group
GroupKey single_group();    // everything under ""

std::map<std::string, PhonemeStats> corpus_stats(std::span<const AlignedUtterance> utterances,
                                                 const GroupKey& key);
std::map<std::string, PhonemeStats> corpus_stats_parallel(
    std::span<const AlignedUtterance> utterances, const GroupKey& key, int jobs);
PhonemeStats overall(const std::map<std::string, PhonemeStats>& groups);

// Per group: `#group<TAB>name`, then `phoneme<TAB>occurrences<TAB>total_ms<TAB>mean_ms`
// rows and `#total_hours<TAB>h`; a final `#overall_hours<TAB>h` line.
std::string stats_tsv(const std::map<std::string, PhonemeStats>& groups);
// Reads `group<TAB>phoneme<TAB>occurrences<TAB>total_ms[<TAB>...]` rows (the
// table fixtures); `#` lines are skipped. Throws E_CORPUS_FORMAT.
std::map<std::string, PhonemeStats> read_stats_rows(std::string_view text);

}  // namespace lsk::aligner
