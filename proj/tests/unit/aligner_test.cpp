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

#include <algorithm>
#include <climits>
#include <functional>

#include "doctest.h"
#include "lsk/aligner/lab.hpp"
#include "lsk/aligner/realign.hpp"
#include "lsk/aligner/stats.hpp"
#include "lsk/common/binary_io.hpp"
#include "lsk/common/error.hpp"
#include "lsk/common/phones.hpp"
#include "lsk/common/rng.hpp"

using namespace lsk;
using namespace lsk::aligner;

namespace {

std::string err(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(e.id());
  }
  return "";
}

// Exhaustive minimum over monotone pairings of tokens with words (branch and
// bound only prunes paths already at or above the best cost).
int brute_cost(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  int best = INT_MAX;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j,
                                                               int cost) {
    if (cost >= best) return;
    if (i == a.size()) {
      for (std::size_t k = j; k < b.size(); ++k) cost += gap_cost(b[k]);
      best = std::min(best, cost);
      return;
    }
    rec(i + 1, j, cost + gap_cost(a[i]));
    int skipped = 0;
    for (std::size_t k = j; k < b.size(); ++k) {
      rec(i + 1, k + 1, cost + skipped + pair_cost(a[i], b[k]));
      skipped += gap_cost(b[k]);
    }
  };
  rec(0, 0, 0);
  return best;
}

std::vector<std::string> random_words(Rng& rng, std::size_t n) {
  static const std::vector<std::string> pool = {"ana", "Ana", "are", "măr", "mar", "mere",
                                                ".",   ",",   "x",   "Măr", "o",   "-"};
  std::vector<std::string> out(n);
  for (auto& w : out) w = pool[rng.below(pool.size())];
  return out;
}

}  // namespace

TEST_CASE("lab parsing examples") {
  auto s = parse_lab("0 1000000 a\n", LabUnits::kHtk100ns);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == PhonemeSegment{"a", 0, 100});
  s = parse_lab("0 50 pau\n", LabUnits::kMs);
  CHECK(s[0] == PhonemeSegment{"pau", 0, 50});
  CHECK(err([] { parse_lab("0 100 a\n50 120 b\n", LabUnits::kMs); }) == "E_LAB_ORDER");
  CHECK(err([] { parse_lab("10 5 a\n", LabUnits::kMs); }) == "E_LAB_ORDER");
  CHECK(err([] { parse_lab("0 5 qq\n", LabUnits::kMs); }) == "E_UNKNOWN_PHONEME");
  CHECK(err([] { parse_lab("0 5\n", LabUnits::kMs); }) == "E_LAB_FORMAT");
  CHECK(err([] { parse_lab("0 x a\n", LabUnits::kMs); }) == "E_LAB_FORMAT");
  CHECK(err([] { parse_lab("-1 5 a\n", LabUnits::kMs); }) == "E_LAB_FORMAT");
  try {
    parse_lab("0 10 a\n\n10 20 qq\n", LabUnits::kMs);
  } catch (const Error& e) {
    CHECK(e.detail() == "'qq' at line 3");
  }
  // Adjacent and gapped segments are both fine.
  CHECK(parse_lab("0 10 a\n10 20 b\n25 30 sp\n", LabUnits::kMs).size() == 3);
  const std::vector<std::string> inv = {"x"};
  CHECK(parse_lab("0 1 x\n", LabUnits::kMs, inv).size() == 1);
  CHECK(err([&] { parse_lab("0 1 a\n", LabUnits::kMs, inv); }) == "E_UNKNOWN_PHONEME");
  CHECK(parse_units("ms") == LabUnits::kMs);
  CHECK(err([] { parse_units("s"); }) == "E_INVALID_ARGUMENT");
}

TEST_CASE("lab round trip") {
  const auto& inv = phones::default_inventory();
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PhonemeSegment> segs;
    std::int64_t t = static_cast<std::int64_t>(rng.below(50));
    for (std::size_t k = rng.below(20); k > 0; --k) {
      const auto start = t + static_cast<std::int64_t>(rng.below(3));
      const auto end = start + static_cast<std::int64_t>(rng.below(200));
      segs.push_back({inv[rng.below(inv.size())], start, end});
      t = end;
    }
    for (auto units : {LabUnits::kMs, LabUnits::kHtk100ns}) {
      const auto text = serialize_lab(segs, units);
      CHECK(parse_lab(text, units) == segs);
      CHECK(serialize_lab(parse_lab(text, units), units) == text);
    }
  }
}

TEST_CASE("word lab groups phones into words") {
  const std::string text =
      "0 100 pau\n100 150 a ana\n150 200 n\n200 260 a\n260 300 sp\n300 350 a are\n350 400 r\n"
      "400 420 e\n420 600 pau\n";
  const auto lab = parse_word_lab(text, LabUnits::kMs);
  CHECK(lab.segments.size() == 9);
  REQUIRE(lab.words.size() == 2);
  CHECK(lab.words[0].surface == "ana");
  CHECK(lab.words[0].segments.size() == 3);
  CHECK(word_span(lab.words[1]) == TimeSpan{300, 420});
  CHECK(serialize_word_lab(lab, LabUnits::kMs) == text);
  CHECK(err([] { parse_lab("0 1 a w\n", LabUnits::kMs); }) == "E_LAB_FORMAT");
}

TEST_CASE("realign examples") {
  std::vector<std::string> five = {"Ana", "are", "mere", "și", "pere"};
  auto r = realign(five, five);
  CHECK(r.cost == 0);
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.word_of_token[i] == i);

  const std::vector<std::string> tokens = {"Ana", "are", "mere", "."};
  const std::vector<std::string> words = {"ana", "are", "mere"};
  r = realign(tokens, words);
  CHECK(r.cost == 0);
  CHECK(brute_cost(tokens, words) == 0);
  CHECK(r.steps.back() == AlignStep{EditOp::kDelete, 3, std::nullopt});
  CHECK_FALSE(r.word_of_token[3].has_value());

  // Diacritic-insensitive second pass.
  CHECK(normalized_match("Măr", "mar"));
  CHECK_FALSE(normalized_match("mar", "mare"));

  // Ties: the later word is matched, the earlier one inserted.
  r = realign(std::vector<std::string>{"a"}, std::vector<std::string>{"a", "a"});
  CHECK(r.cost == 1);
  CHECK(r.steps[0] == AlignStep{EditOp::kInsert, std::nullopt, 0});
  CHECK(r.steps[1] == AlignStep{EditOp::kMatch, 0, 1});
  // A substitution beats a deletion plus an insertion.
  r = realign(std::vector<std::string>{"x"}, std::vector<std::string>{"y"});
  CHECK(r.cost == 1);
  CHECK(r.steps.size() == 1);
  CHECK(r.steps[0].op == EditOp::kSubstitute);
  CHECK_FALSE(r.word_of_token[0].has_value());
}

TEST_CASE("realign spans come from the matched words") {
  std::vector<AlignedWord> words = {
      {"ana", {{"a", 100, 150}, {"n", 150, 200}, {"a", 200, 260}}},
      {"are", {{"a", 300, 350}, {"r", 350, 400}, {"e", 400, 420}}},
  };
  const std::vector<std::string> tokens = {"Ana", "nu", "are", "!"};
  const auto r = realign(tokens, words);
  CHECK(r.spans[0] == TimeSpan{100, 260});
  CHECK_FALSE(r.spans[1].has_value());
  CHECK(r.spans[2] == TimeSpan{300, 420});
  CHECK_FALSE(r.spans[3].has_value());

  std::vector<AlignedUtterance> utts(3);
  for (auto& u : utts) {
    u.words = words;
    u.tokens = tokens;
  }
  realign_all(utts, 2);
  for (const auto& u : utts) CHECK(u.token_spans == r.spans);
}

TEST_CASE("realign cost equals the brute-force optimum") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_words(rng, 1 + rng.below(12));
    const auto b = random_words(rng, 1 + rng.below(12));
    const auto r = realign(a, b);
    CHECK(r.cost == brute_cost(a, b));
    // Symmetry under mirrored operations.
    CHECK(realign(b, a).cost == r.cost);
    // The steps form a valid alignment of that cost with monotone spans.
    int cost = 0;
    std::size_t ti = 0, wi = 0;
    for (const auto& s : r.steps) {
      switch (s.op) {
        case EditOp::kMatch:
        case EditOp::kSubstitute:
          CHECK(*s.token == ti++);
          CHECK(*s.word == wi++);
          cost += pair_cost(a[*s.token], b[*s.word]);
          CHECK((s.op == EditOp::kMatch) == (pair_cost(a[*s.token], b[*s.word]) == 0));
          break;
        case EditOp::kDelete:
          CHECK(*s.token == ti++);
          cost += gap_cost(a[*s.token]);
          break;
        case EditOp::kInsert:
          CHECK(*s.word == wi++);
          cost += gap_cost(b[*s.word]);
          break;
      }
    }
    CHECK(ti == a.size());
    CHECK(wi == b.size());
    CHECK(cost == r.cost);
    std::optional<std::size_t> last;
    for (const auto& w : r.word_of_token) {
      if (!w) continue;
      if (last) CHECK(*w > *last);
      last = w;
    }
  }
}

TEST_CASE("stats examples") {
  PhonemeStats s;
  s.add("@", 52117, 4108212);
  CHECK(s.phonemes().at("@").mean_display() == "78.83");
  CHECK(hours_display(0) == "0.00");
  CHECK(corpus_stats({}, group_by_field()).empty());
  CHECK(hours_display(overall({}).total_ms()) == "0.00");
  // Half-up at the display boundary.
  PhonemeStats h;
  h.add("a", 8, 1);  // 0.125 ms
  CHECK(h.phonemes().at("a").mean_display() == "0.13");
  CHECK(hours_hundredths(18'000) == 1);  // 0.005 h rounds up
  CHECK(hours_hundredths(17'999) == 0);
}

TEST_CASE("speaker 1 of the speaker fixture totals 2.32 h") {
  const auto groups =
      read_stats_rows(read_text_file(std::string(LSK_FIXTURES) + "/table1_speakers.tsv"));
  REQUIRE(groups.size() == 4);
  const auto& s1 = groups.at("speaker1");
  CHECK(s1.phonemes().size() == 34);
  CHECK(hours_display(s1.total_ms()) == "2.32");
  for (const auto& [p, t] : s1.phonemes()) CHECK(phones::in_default_inventory(p));
}

TEST_CASE("corpus stats over segments: serial, parallel and invariants") {
  const auto& inv = phones::default_inventory();
  Rng rng(4);
  std::vector<AlignedUtterance> utts(60);
  for (std::size_t i = 0; i < utts.size(); ++i) {
    utts[i].id = "u" + std::to_string(i);
    utts[i].group = "spk" + std::to_string(rng.below(3));
    std::int64_t t = 0;
    for (std::size_t k = 1 + rng.below(30); k > 0; --k) {
      const auto d = static_cast<std::int64_t>(rng.below(300));
      utts[i].segments.push_back({inv[rng.below(inv.size())], t, t + d});
      t += d;
    }
  }
  const auto serial = corpus_stats(utts, group_by_field());
  CHECK(corpus_stats_parallel(utts, group_by_field(), 4) == serial);
  std::int64_t sum = 0;
  for (const auto& [g, s] : serial) {
    std::int64_t inner = 0;
    for (const auto& [p, t] : s.phonemes()) {
      inner += t.total_ms;
      CHECK(t.mean_ms() == doctest::Approx(static_cast<double>(t.total_ms) / t.occurrences));
    }
    CHECK(inner == s.total_ms());
    sum += s.total_ms();
  }
  CHECK(overall(serial).total_ms() == sum);
  CHECK(corpus_stats(utts, single_group()).at("") == overall(serial));

  const auto tsv = stats_tsv(serial);
  CHECK(tsv.rfind("#overall_hours\t", 0) == std::string::npos);
  CHECK(tsv.find("#group\tspk0\n") == 0);
  CHECK(tsv.find("#overall_hours\t") != std::string::npos);
  CHECK(err([] { read_stats_rows("g\ta\tx\t1\n"); }) == "E_CORPUS_FORMAT");
}
