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
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "harness.hpp"
#include "lsk/aligner/lab.hpp"
#include "lsk/aligner/realign.hpp"
#include "lsk/aligner/stats.hpp"
#include "lsk/common/binary_io.hpp"
#include "lsk/common/phones.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/corpusforge/cleaning.hpp"
#include "lsk/corpusforge/lexicon.hpp"
#include "lsk/corpusforge/triphones.hpp"

namespace lsk::acceptance {

using namespace lsk::corpusforge;

namespace {

// Hours in integer hundredths, rounded half-up, from the raw millisecond sum.
std::int64_t hundredths(std::int64_t ms) { return (ms + 18'000) / 36'000; }

}  // namespace

void tables(Outcome& o) {
  const auto t1 = aligner::read_stats_rows(read_text_file(fixture("table1_speakers.tsv")));
  const std::map<std::string, std::int64_t> printed = {
      {"speaker1", 232}, {"speaker2", 400}, {"speaker3", 458}, {"speaker4", 146}};
  o.expect(t1.size() == printed.size(), "speaker fixture has four speakers");
  std::string measured;
  for (const auto& [spk, want] : printed) {
    const auto it = t1.find(spk);
    if (!o.expect(it != t1.end(), spk + " missing")) continue;
    const auto got = aligner::hours_hundredths(it->second.total_ms());
    o.expect(got == hundredths(it->second.total_ms()), spk + " rounding disagrees with oracle");
    o.expect(std::llabs(got - want) <= 1, spk + " hours " + aligner::hours_display(it->second.total_ms()));
    measured += aligner::hours_display(it->second.total_ms()) + "/";
  }
  const auto all = aligner::overall(t1).total_ms();
  o.expect(std::llabs(aligner::hours_hundredths(all) - 1236) <= 1,
           "overall hours " + aligner::hours_display(all));

  // Printed means come from the fifth column, read independently of the tool.
  const auto t2 = aligner::read_stats_rows(read_text_file(fixture("table2_sections.tsv")));
  std::size_t means = 0;
  double worst = 0.0;
  for (const auto& line : utf8::split(read_text_file(fixture("table2_sections.tsv")), '\n')) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = utf8::split(line, '\t');
    if (!o.expect(f.size() == 5, "section fixture row has five fields: " + line)) continue;
    const double raw = std::stod(f[3]) / std::stod(f[2]);
    const double tool = t2.at(f[0]).phonemes().at(f[1]).mean_ms();
    const double diff = std::abs(tool - std::stod(f[4]));
    worst = std::max(worst, diff);
    o.expect(std::abs(tool - raw) < 1e-9, f[0] + " " + f[1] + " mean differs from total/occurrences");
    o.expect(diff <= 0.005 + 1e-9, f[0] + " " + f[1] + " mean " + std::to_string(tool) + " vs " + f[4]);
    ++means;
  }
  o.expect(means == 68, "section fixture has 68 rows");
  o.expect(t2.at("non-free").phonemes().at("@").mean_display() == "78.83", "@ non-free mean 78.83");
  char buf[160];
  std::snprintf(buf, sizeof buf, "speakers %s overall %s h; %zu means, worst |diff| %.4f ms",
                measured.substr(0, measured.size() - 1).c_str(), aligner::hours_display(all).c_str(),
                means, worst);
  o.summarize(buf);
}

namespace {

using Key = std::string;  // "p1 p2 p3"

std::map<Key, std::uint64_t> brute_counts(const std::vector<CandidateSentence>& corpus) {
  std::map<Key, std::uint64_t> counts;
  for (const auto& s : corpus) {
    std::vector<std::string> p = {"#"};
    p.insert(p.end(), s.phones->begin(), s.phones->end());
    p.push_back("#");
    for (std::size_t i = 0; i + 2 < p.size(); ++i) counts[p[i] + " " + p[i + 1] + " " + p[i + 2]]++;
  }
  return counts;
}

std::uint64_t brute_h(const std::map<Key, std::uint64_t>& counts) {
  std::uint64_t best = 0;
  for (std::uint64_t h = 0; h <= counts.size(); ++h) {
    std::uint64_t at_least = 0;
    for (const auto& [k, n] : counts) at_least += n >= h ? 1 : 0;
    if (at_least >= h) best = h;
  }
  return best;
}

std::vector<std::uint64_t> sentence_counts(const CandidateSentence& s,
                                           const std::map<Key, std::uint64_t>& counts) {
  std::vector<std::string> p = {"#"};
  p.insert(p.end(), s.phones->begin(), s.phones->end());
  p.push_back("#");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i + 2 < p.size(); ++i) out.push_back(counts.at(p[i] + " " + p[i + 1] + " " + p[i + 2]));
  return out;
}

}  // namespace

void balancing(Outcome& o) {
  Rng rng(722);
  std::size_t sentences = 0, kept_total = 0, max_h = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 1 + rng.below(500);
    const auto alphabet = 1 + rng.below(20);
    std::vector<CandidateSentence> corpus(n);
    for (std::size_t i = 0; i < n; ++i) {
      corpus[i].id = "s" + std::to_string(i + 1);
      std::vector<std::string> p(1 + rng.below(12));
      for (auto& x : p) x = "p" + std::to_string(rng.below(alphabet));
      corpus[i].phones = std::move(p);
    }
    sentences += n;
    const auto counts = brute_counts(corpus);
    const auto table = triphone_histogram(corpus);
    const auto h = brute_h(counts);
    max_h = std::max<std::size_t>(max_h, h);
    const std::string tag = "corpus " + std::to_string(trial) + ": ";
    o.expect(table.types() == counts.size(), tag + "triphone type count");
    bool same = true;
    for (const auto& [k, c] : counts) {
      const auto parts = utf8::split(k, ' ');
      same = same && table.count({parts[0], parts[1], parts[2]}) == c;
    }
    o.expect(same, tag + "triphone counts");
    o.expect(table.h_index() == h, tag + "h-index " + std::to_string(table.h_index()) + " vs " + std::to_string(h));

    BalanceParams params;
    const std::uint64_t choices[] = {1, 2, 3, 5, 10, 25, 100, 1 + rng.below(200)};
    params.rare = choices[rng.below(std::size(choices))];
    std::vector<std::string> want;
    for (const auto& s : corpus) {
      const auto c = sentence_counts(s, counts);
      const bool rare = std::any_of(c.begin(), c.end(), [&](auto x) { return x < params.rare; });
      const bool frequent = std::all_of(c.begin(), c.end(), [&](auto x) { return x > h; });
      if (rare || !frequent) want.push_back(s.id);
    }
    std::vector<std::string> got;
    for (const auto& s : select_balanced(corpus, table, params)) got.push_back(s.id);
    o.expect(got == want, tag + "selection with rare=" + std::to_string(params.rare));
    kept_total += got.size();

    const auto sorted = sort_rarity(corpus, table);
    o.expect(sorted.size() == corpus.size(), tag + "sort keeps every sentence");
    std::uint64_t prev = 0;
    for (const auto& s : sorted) {
      const auto c = sentence_counts(s, counts);
      const auto key = *std::min_element(c.begin(), c.end());
      o.expect(rarity_key(*s.phones, table) == key, tag + "rarity key of " + s.id);
      o.expect(key >= prev, tag + "rarity keys ascend at " + s.id);
      prev = key;
    }
  }
  o.summarize("50 corpora, ", sentences, " sentences, ", kept_total, " kept, max h-index ", max_h);
}

namespace {

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 5 < s.size() && s[i + 1] == 'u') {
      utf8::append(out, static_cast<char32_t>(std::stoul(std::string(s.substr(i + 2, 4)), nullptr, 16)));
      i += 5;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

void cleaning(Outcome& o) {
  const auto lex = Lexicon::load(fixture("lexicon.txt"));
  CleaningConfig cfg;
  cfg.lexicon = &lex;

  struct Row {
    std::string id, expected;
    std::vector<std::string> probes;
    std::string text;
  };
  std::vector<Row> rows;
  for (const auto& line : utf8::split(read_text_file(fixture("cleaning_golden.tsv")), '\n')) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = utf8::split(line, '\t');
    if (!o.expect(f.size() == 4, "golden row has four fields")) continue;
    rows.push_back({f[0], f[1], utf8::split_whitespace(f[2]), unescape(f[3])});
  }
  o.expect(rows.size() == 30, "30 golden sentences");

  std::vector<CandidateSentence> in;
  for (const auto& r : rows) {
    CandidateSentence s;
    s.id = r.id;
    s.raw = r.text;
    in.push_back(std::move(s));
  }
  const auto out = clean(in, cfg);
  std::map<std::string, std::string> verdict, kept_text;
  for (const auto& s : out.kept) {
    verdict[s.id] = "keep";
    kept_text[s.id] = s.raw;
  }
  for (const auto& s : out.rejected) verdict[s.id] = std::string(1, *s.rejection);

  std::size_t agree = 0;
  std::map<char, int> accepts, rejects;
  for (const auto& r : rows) {
    agree += o.expect(verdict[r.id] == r.expected,
                      "sentence " + r.id + ": " + verdict[r.id] + " vs " + r.expected) ? 1 : 0;
    for (const auto& p : r.probes) {
      if (!o.expect(p.size() == 2, "probe " + p)) continue;
      const bool rejected = rule_verdict(p[0], r.text, cfg).has_value();
      o.expect(rejected == (p[1] == '-'), "sentence " + r.id + " probe " + p);
      (p[1] == '-' ? rejects : accepts)[p[0]]++;
    }
  }
  for (char rule : kRejectRules) {
    o.expect(accepts[rule] >= 2, std::string("rule ") + rule + " has two accept cases");
    o.expect(rejects[rule] >= 2, std::string("rule ") + rule + " has two reject cases");
  }

  const std::vector<std::string> prefixes = {"re"};
  o.expect(correct_diacritics("cîte", &lex, prefixes) == "câte", "cîte -> câte");
  o.expect(correct_diacritics("reîncepe", &lex, prefixes) == "reîncepe", "prefix keeps î in reîncepe");
  o.expect(correct_diacritics("reîncepe", &lex, {}) == "reâncepe", "without the prefix list î is corrected");
  o.expect(kept_text["29"] == "Câte mere are Ana ?", "golden Cîte sentence corrected");
  o.expect(kept_text["30"] == "Tânărul reîncepe lucrul .", "golden prefix sentence keeps î");
  o.summarize(agree, "/", rows.size(), " verdicts; ", out.kept.size(), " kept, ", out.rejected.size(), " rejected");
}

namespace {

int brute_cost(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  int best = INT_MAX;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int cost) {
    if (cost >= best) return;
    if (i == a.size()) {
      for (std::size_t k = j; k < b.size(); ++k) cost += aligner::gap_cost(b[k]);
      best = std::min(best, cost);
      return;
    }
    rec(i + 1, j, cost + aligner::gap_cost(a[i]));
    int skipped = 0;
    for (std::size_t k = j; k < b.size(); ++k) {
      rec(i + 1, k + 1, cost + skipped + aligner::pair_cost(a[i], b[k]));
      skipped += aligner::gap_cost(b[k]);
    }
  };
  rec(0, 0, 0);
  return best;
}

}  // namespace

void aligner(Outcome& o) {
  using namespace lsk::aligner;
  static const std::vector<std::string> pool = {"ana", "Ana", "are", "măr", "mar", "mere", ".",
                                                ",",   "x",   "Măr", "o",   "-",   "pere", "șase"};
  Rng rng(724);
  int total_cost = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> a(rng.below(13)), b(rng.below(13));
    for (auto& w : a) w = pool[rng.below(pool.size())];
    for (auto& w : b) w = pool[rng.below(pool.size())];
    const auto r = realign(a, b);
    const auto want = brute_cost(a, b);
    o.expect(r.cost == want, "pair " + std::to_string(trial) + ": cost " + std::to_string(r.cost) +
                                 " vs " + std::to_string(want));
    // The reported steps realize the reported cost.
    int cost = 0;
    std::size_t ti = 0, wi = 0;
    bool valid = true;
    for (const auto& s : r.steps) {
      if (s.token) valid = valid && *s.token == ti++;
      if (s.word) valid = valid && *s.word == wi++;
      if (s.token && s.word) cost += pair_cost(a[*s.token], b[*s.word]);
      else if (s.token) cost += gap_cost(a[*s.token]);
      else if (s.word) cost += gap_cost(b[*s.word]);
    }
    o.expect(valid && ti == a.size() && wi == b.size() && cost == r.cost,
             "pair " + std::to_string(trial) + ": steps do not realize the cost");
    total_cost += want;
  }

  const auto& inv = phones::default_inventory();
  std::size_t segments = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PhonemeSegment> segs;
    std::int64_t t = static_cast<std::int64_t>(rng.below(50));
    for (std::size_t k = rng.below(20); k > 0; --k) {
      const auto start = t + static_cast<std::int64_t>(rng.below(3));
      const auto end = start + static_cast<std::int64_t>(rng.below(200));
      segs.push_back({inv[rng.below(inv.size())], start, end});
      t = end;
    }
    segments += segs.size();
    for (auto units : {LabUnits::kMs, LabUnits::kHtk100ns}) {
      const auto text = serialize_lab(segs, units);
      o.expect(parse_lab(text, units) == segs, "lab round trip of trial " + std::to_string(trial));
      o.expect(serialize_lab(parse_lab(text, units), units) == text, "lab text fixed point");
    }
  }
  o.summarize("200 pairs (summed optimum ", total_cost, "), ", segments, " lab segments round-tripped");
}

}  // namespace lsk::acceptance
