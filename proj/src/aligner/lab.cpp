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

#include "lsk/aligner/lab.hpp"

#include <charconv>

#include "lsk/common/error.hpp"
#include "lsk/common/phones.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::aligner {

namespace {

constexpr std::int64_t kHtkPerMs = 10000;

std::int64_t parse_time(std::string_view field, LabUnits units, std::size_t line) {
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  auto [p, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || p != end || v < 0) {
    throw Error(Errc::kLabFormat, "bad time '" + std::string(field) + "' at line " +
                                      std::to_string(line));
  }
  if (units == LabUnits::kMs) return v;
  return (v + kHtkPerMs / 2) / kHtkPerMs;
}

std::string format_time(std::int64_t ms, LabUnits units) {
  return std::to_string(units == LabUnits::kMs ? ms : ms * kHtkPerMs);
}

bool known(const std::string& symbol, std::span<const std::string> inventory) {
  if (inventory.empty()) return phones::in_default_inventory(symbol);
  for (const auto& s : inventory) {
    if (s == symbol) return true;
  }
  return false;
}

struct Record {
  PhonemeSegment seg;
  std::string word;  // empty when absent
};

std::vector<Record> parse_records(std::string_view text, LabUnits units,
                                  std::span<const std::string> inventory, bool allow_word) {
  std::vector<Record> out;
  std::size_t line_no = 0;
  for (const auto& raw : utf8::split(text, '\n')) {
    ++line_no;
    const auto line = utf8::trim(raw);
    if (line.empty()) continue;
    const auto f = utf8::split_whitespace(line);
    if (f.size() != 3 && !(allow_word && f.size() == 4)) {
      throw Error(Errc::kLabFormat, "expected 'start end symbol' at line " +
                                        std::to_string(line_no));
    }
    Record r;
    r.seg.start_ms = parse_time(f[0], units, line_no);
    r.seg.end_ms = parse_time(f[1], units, line_no);
    r.seg.phoneme = f[2];
    if (f.size() == 4) r.word = f[3];
    if (r.seg.end_ms < r.seg.start_ms) {
      throw Error(Errc::kLabOrder, "segment ends before it starts at line " +
                                       std::to_string(line_no));
    }
    if (!out.empty() && r.seg.start_ms < out.back().seg.end_ms) {
      throw Error(Errc::kLabOrder, "segment overlaps the previous one at line " +
                                       std::to_string(line_no));
    }
    if (!known(r.seg.phoneme, inventory)) {
      throw Error(Errc::kUnknownPhoneme, "'" + r.seg.phoneme + "' at line " +
                                             std::to_string(line_no));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

LabUnits parse_units(std::string_view name) {
  if (name == "htk100ns") return LabUnits::kHtk100ns;
  if (name == "ms") return LabUnits::kMs;
  throw Error(Errc::kInvalidArgument, "unknown lab units '" + std::string(name) + "'");
}

std::vector<PhonemeSegment> parse_lab(std::string_view text, LabUnits units,
                                      std::span<const std::string> inventory) {
  std::vector<PhonemeSegment> out;
  for (auto& r : parse_records(text, units, inventory, false)) out.push_back(std::move(r.seg));
  return out;
}

std::string serialize_lab(std::span<const PhonemeSegment> segments, LabUnits units) {
  std::string out;
  for (const auto& s : segments) {
    out += format_time(s.start_ms, units) + ' ' + format_time(s.end_ms, units) + ' ' + s.phoneme +
           '\n';
  }
  return out;
}

WordLab parse_word_lab(std::string_view text, LabUnits units,
                       std::span<const std::string> inventory) {
  WordLab lab;
  bool open = false;
  for (auto& r : parse_records(text, units, inventory, true)) {
    if (!r.word.empty()) {
      lab.words.push_back(AlignedWord{r.word, {}});
      open = true;
    } else if (phones::is_silence(r.seg.phoneme)) {
      open = false;
    }
    if (open) lab.words.back().segments.push_back(r.seg);
    lab.segments.push_back(std::move(r.seg));
  }
  return lab;
}

std::string serialize_word_lab(const WordLab& lab, LabUnits units) {
  std::string out;
  std::size_t w = 0, k = 0;  // next word, position inside the current word
  for (const auto& s : lab.segments) {
    out += format_time(s.start_ms, units) + ' ' + format_time(s.end_ms, units) + ' ' + s.phoneme;
    if (w < lab.words.size() && k == 0 && !lab.words[w].segments.empty() &&
        lab.words[w].segments.front() == s) {
      out += ' ' + lab.words[w].surface;
      k = 1;
      if (k == lab.words[w].segments.size()) {
        ++w;
        k = 0;
      }
    } else if (k > 0) {
      if (++k == lab.words[w].segments.size()) {
        ++w;
        k = 0;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace lsk::aligner
