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

#include "lsk/aligner/stats.hpp"

#include <charconv>
#include <cstdio>

#include "lsk/common/error.hpp"
#include "lsk/common/parallel.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::aligner {

namespace {

constexpr std::int64_t kMsPerHour = 3'600'000;

// round_half_up(num / den) for non-negative num, positive den.
std::int64_t div_half_up(std::int64_t num, std::int64_t den) { return (2 * num + den) / (2 * den); }

std::string hundredths(std::int64_t v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(v / 100),
                static_cast<long long>(v % 100));
  return buf;
}

template <typename T>
T parse_num(const std::string& field, std::size_t line) {
  T v{};
  const auto* end = field.data() + field.size();
  auto [p, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || p != end || v < T{}) {
    throw Error(Errc::kCorpusFormat, "bad number '" + field + "' at line " + std::to_string(line));
  }
  return v;
}

}  // namespace

double PhonemeTotals::mean_ms() const {
  return occurrences == 0 ? 0.0 : static_cast<double>(total_ms) / occurrences;
}

std::string PhonemeTotals::mean_display() const {
  if (occurrences == 0) return "0.00";
  return hundredths(div_half_up(total_ms * 100, static_cast<std::int64_t>(occurrences)));
}

void PhonemeStats::add(std::string_view phoneme, std::uint64_t occurrences, std::int64_t total_ms) {
  auto& t = phonemes_[std::string(phoneme)];
  t.occurrences += occurrences;
  t.total_ms += total_ms;
  total_ms_ += total_ms;
}

void PhonemeStats::merge(const PhonemeStats& other) {
  for (const auto& [p, t] : other.phonemes_) add(p, t.occurrences, t.total_ms);
}

std::int64_t hours_hundredths(std::int64_t total_ms) { return div_half_up(total_ms * 100, kMsPerHour); }

std::string hours_display(std::int64_t total_ms) { return hundredths(hours_hundredths(total_ms)); }

GroupKey group_by_field() {
  return [](const AlignedUtterance& u) { return u.group; };
}

GroupKey single_group() {
  return [](const AlignedUtterance&) { return std::string(); };
}

std::map<std::string, PhonemeStats> corpus_stats(std::span<const AlignedUtterance> utterances,
                                                 const GroupKey& key) {
  std::map<std::string, PhonemeStats> out;
  for (const auto& u : utterances) {
    auto& g = out[key(u)];
    for (const auto& s : u.segments) g.add(s);
  }
  return out;
}

std::map<std::string, PhonemeStats> corpus_stats_parallel(
    std::span<const AlignedUtterance> utterances, const GroupKey& key, int jobs) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(utterances.size(), std::max(jobs, 1) * 4));
  std::vector<std::map<std::string, PhonemeStats>> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const auto b = utterances.size() * c / chunks, e = utterances.size() * (c + 1) / chunks;
    partial[c] = corpus_stats(utterances.subspan(b, e - b), key);
  });
  std::map<std::string, PhonemeStats> out;
  for (const auto& p : partial) {
    for (const auto& [g, s] : p) out[g].merge(s);
  }
  return out;
}

PhonemeStats overall(const std::map<std::string, PhonemeStats>& groups) {
  PhonemeStats all;
  for (const auto& [g, s] : groups) all.merge(s);
  return all;
}

std::string stats_tsv(const std::map<std::string, PhonemeStats>& groups) {
  std::string out;
  for (const auto& [g, s] : groups) {
    out += "#group\t" + g + '\n';
    for (const auto& [p, t] : s.phonemes()) {
      out += p + '\t' + std::to_string(t.occurrences) + '\t' + std::to_string(t.total_ms) + '\t' +
             t.mean_display() + '\n';
    }
    out += "#total_hours\t" + hours_display(s.total_ms()) + '\n';
  }
  out += "#overall_hours\t" + hours_display(overall(groups).total_ms()) + '\n';
  return out;
}

std::map<std::string, PhonemeStats> read_stats_rows(std::string_view text) {
  std::map<std::string, PhonemeStats> out;
  std::size_t line_no = 0;
  for (const auto& line : utf8::split(text, '\n')) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto f = utf8::split(line, '\t');
    if (f.size() < 4) {
      throw Error(Errc::kCorpusFormat, "expected group, phoneme, occurrences, total_ms at line " +
                                           std::to_string(line_no));
    }
    out[f[0]].add(f[1], parse_num<std::uint64_t>(f[2], line_no),
                  parse_num<std::int64_t>(f[3], line_no));
  }
  return out;
}

}  // namespace lsk::aligner
