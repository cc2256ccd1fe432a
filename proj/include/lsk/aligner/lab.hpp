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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsk::aligner {

enum class LabUnits { kHtk100ns, kMs };

LabUnits parse_units(std::string_view name);  // "htk100ns" | "ms"

struct PhonemeSegment {
  std::string phoneme;
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;
  std::int64_t duration_ms() const { return end_ms - start_ms; }
  bool operator==(const PhonemeSegment&) const = default;
};

struct AlignedWord {
  std::string surface;
  std::vector<PhonemeSegment> segments;
  bool operator==(const AlignedWord&) const = default;
};

// `start end symbol` per line. HTK times (100 ns) are rounded to the nearest
// millisecond. Throws E_LAB_FORMAT for malformed lines, E_LAB_ORDER for
// end < start or a segment starting before the previous one ends, and
// E_UNKNOWN_PHONEME for symbols outside `inventory` (empty = default
// inventory). Error details carry the 1-based line number.
std::vector<PhonemeSegment> parse_lab(std::string_view text, LabUnits units,
                                      std::span<const std::string> inventory = {});
std::string serialize_lab(std::span<const PhonemeSegment> segments, LabUnits units);

struct WordLab {
  std::vector<PhonemeSegment> segments;  // every segment, silences included
  std::vector<AlignedWord> words;
};

// Lab with an optional fourth field; a segment carrying it starts a new word
// named by it. Silence segments without the field close the current word.
WordLab parse_word_lab(std::string_view text, LabUnits units,
                       std::span<const std::string> inventory = {});
std::string serialize_word_lab(const WordLab& lab, LabUnits units);

}  // namespace lsk::aligner
