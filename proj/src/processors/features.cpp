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

#include "lsk/processors/features.hpp"

#include <limits>
#include <map>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::processors {

namespace {

using learners::kPad;

std::string pad() { return std::string(kPad); }

std::string word_at(const Sentence& s, long i) {
  if (i < 0 || i >= static_cast<long>(s.tokens.size())) return pad();
  return utf8::casefold(s.tokens[static_cast<std::size_t>(i)].wordform);
}

std::string pos_at(const Sentence& s, long i) {
  if (i < 0 || i >= static_cast<long>(s.tokens.size())) return pad();
  const auto& p = s.tokens[static_cast<std::size_t>(i)].pos;
  return p ? *p : pad();
}

void add_affixes(FeatureVector& x, const std::u32string& w) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto n = std::min(k, w.size());
    x.add("s" + std::to_string(k), utf8::encode(w.substr(w.size() - n)));
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    x.add("p" + std::to_string(k), utf8::encode(w.substr(0, std::min(k, w.size()))));
  }
}

std::string offset_name(char prefix, long d) {
  std::string out(1, prefix);
  if (d > 0) out += "+";
  out += std::to_string(d);
  return out;
}

}  // namespace

FeatureVector tagger_features(const Sentence& s, std::size_t i,
                              const std::vector<std::string>& prev_tags) {
  FeatureVector x;
  const auto at = static_cast<long>(i);
  for (long d = -2; d <= 2; ++d) x.add(offset_name('w', d), word_at(s, at + d));
  const auto raw = utf8::decode(s.tokens[i].wordform);
  add_affixes(x, utf8::decode(utf8::casefold(s.tokens[i].wordform)));
  x.add("cap", !raw.empty() && utf8::is_upper(raw.front()) ? "1" : "0");
  bool digit = false;
  for (char32_t c : raw) digit = digit || utf8::is_digit(c);
  x.add("dig", digit ? "1" : "0");
  x.add("t-1", i >= 1 ? prev_tags[i - 1] : pad());
  x.add("t-2", i >= 2 ? prev_tags[i - 2] : pad());
  return x;
}

FeatureVector lemma_features(const Sentence& s, std::size_t i) {
  FeatureVector x;
  const auto w = utf8::casefold(s.tokens[i].wordform);
  x.add("w0", w);
  add_affixes(x, utf8::decode(w));
  x.add("pos", pos_at(s, static_cast<long>(i)));
  return x;
}

FeatureVector chunk_features(const Sentence& s, std::size_t i) {
  FeatureVector x;
  const auto at = static_cast<long>(i);
  for (long d = -2; d <= 2; ++d) x.add(offset_name('p', d), pos_at(s, at + d));
  for (long d = -1; d <= 1; ++d) x.add(offset_name('w', d), word_at(s, at + d));
  return x;
}

FeatureVector char_window(const std::u32string& chars, std::size_t i) {
  FeatureVector x;
  const auto at = static_cast<long>(i);
  for (long d = -kCharWindow; d <= kCharWindow; ++d) {
    const long k = at + d;
    std::string v;
    if (k < 0 || k >= static_cast<long>(chars.size())) {
      v = pad();
    } else {
      utf8::append(v, utf8::to_lower(chars[static_cast<std::size_t>(k)]));
    }
    x.add(offset_name('c', d), v);
  }
  return x;
}

FeatureVector stress_features(const std::vector<std::string>& syllables, std::size_t i) {
  FeatureVector x;
  const auto syl = utf8::casefold(syllables[i]);
  x.add("syl", syl);
  std::string vowel = pad();
  for (char32_t c : utf8::decode(syl)) {
    if (utf8::is_vowel(c)) {
      vowel.clear();
      utf8::append(vowel, c);
      break;
    }
  }
  x.add("vow", vowel);
  x.add("ord", std::to_string(i));
  x.add("rord", std::to_string(syllables.size() - 1 - i));
  x.add("nsyl", std::to_string(syllables.size()));
  return x;
}

std::string LemmaRule::label() const { return std::to_string(strip) + ":" + append; }

LemmaRule LemmaRule::from_label(std::string_view label) {
  const auto colon = label.find(':');
  LemmaRule r;
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(Errc::kModelFormat, "bad lemma rule '" + std::string(label) + "'");
  }
  r.strip = 0;
  for (char c : label.substr(0, colon)) {
    if (c < '0' || c > '9') throw Error(Errc::kModelFormat, "bad lemma rule '" + std::string(label) + "'");
    r.strip = r.strip * 10 + static_cast<std::size_t>(c - '0');
  }
  r.append = std::string(label.substr(colon + 1));
  return r;
}

std::string LemmaRule::apply(std::string_view word) const {
  const auto w = utf8::decode(word);
  if (strip > w.size()) return std::string(word);
  return utf8::encode(w.substr(0, w.size() - strip)) + append;
}

LemmaRule induce_rule(std::string_view word, std::string_view lemma) {
  const auto w = utf8::decode(word);
  const auto l = utf8::decode(lemma);
  std::size_t common = 0;
  while (common < w.size() && common < l.size() && w[common] == l[common]) ++common;
  return {w.size() - common, utf8::encode(l.substr(common))};
}

namespace {

// Phones a Romanian letter usually realizes. A group in this table costs 0,
// a single phone outside it costs 2, an empty group 1.5.
const std::map<char32_t, std::vector<std::string>>& affinity() {
  static const std::map<char32_t, std::vector<std::string>> kTable = {
      {U'a', {"a", "e@", "o@"}}, {U'ă', {"@"}},        {U'â', {"a@"}},       {U'î', {"a@"}},
      {U'b', {"b"}},             {U'c', {"k", "ch"}},  {U'd', {"d"}},        {U'e', {"e", "e@", "j"}},
      {U'f', {"f"}},             {U'g', {"g", "dz"}},  {U'h', {"h"}},        {U'i', {"i", "ij", "j"}},
      {U'j', {"zh"}},            {U'k', {"k"}},        {U'l', {"l"}},        {U'm', {"m"}},
      {U'n', {"n"}},             {U'o', {"o", "o@", "w"}}, {U'p', {"p"}},    {U'q', {"k"}},
      {U'r', {"r"}},             {U's', {"s"}},        {U'ș', {"sh"}},       {U'ş', {"sh"}},
      {U't', {"t"}},             {U'ț', {"ts"}},       {U'ţ', {"ts"}},       {U'u', {"u", "w"}},
      {U'v', {"v"}},             {U'w', {"w", "v"}},   {U'x', {"k+s", "g+z"}}, {U'y', {"i", "j"}},
      {U'z', {"z"}},
  };
  return kTable;
}

double group_cost(char32_t c, const std::vector<std::string>& phones, std::size_t from,
                  std::size_t n) {
  const auto& table = affinity();
  auto it = table.find(c);
  static const std::vector<std::string> kNone;
  const auto& expected = it == table.end() ? kNone : it->second;
  auto expected_has = [&](const std::string& g) {
    return std::find(expected.begin(), expected.end(), g) != expected.end();
  };
  if (n == 0) return 1.5;
  if (n == 1) return expected_has(phones[from]) ? 0.0 : 2.0;
  if (n == 2) {
    if (expected_has(phones[from] + "+" + phones[from + 1])) return 0.0;
    return 1.0 + (expected_has(phones[from]) ? 0.0 : 2.0) + (expected_has(phones[from + 1]) ? 0.0 : 2.0);
  }
  return 3.0 * static_cast<double>(n);
}

}  // namespace

std::vector<std::vector<std::string>> align_letters(const std::u32string& word,
                                                    const std::vector<std::string>& phones) {
  const std::size_t n = word.size();
  const std::size_t m = phones.size();
  std::vector<std::vector<std::string>> out(n);
  if (n == 0) return out;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // cost[i][j]: first i letters consumed j phones.
  std::vector<std::vector<double>> cost(n + 1, std::vector<double>(m + 1, kInf));
  std::vector<std::vector<std::size_t>> take(n + 1, std::vector<std::size_t>(m + 1, 0));
  cost[0][0] = 0.0;
  // Preference order on equal cost: one phone, none, two.
  constexpr std::size_t kOrder[] = {1, 0, 2};
  for (std::size_t i = 1; i <= n; ++i) {
    const bool last = i == n;
    for (std::size_t j = 0; j <= m; ++j) {
      auto consider = [&](std::size_t k) {
        if (k > j || cost[i - 1][j - k] == kInf) return;
        const double c = cost[i - 1][j - k] + group_cost(word[i - 1], phones, j - k, k);
        if (c < cost[i][j]) {
          cost[i][j] = c;
          take[i][j] = k;
        }
      };
      for (auto k : kOrder) consider(k);
      if (last) {
        for (std::size_t k = 3; k <= j; ++k) consider(k);
      }
    }
  }
  std::size_t j = m;
  for (std::size_t i = n; i >= 1; --i) {
    const auto k = take[i][j];
    out[i - 1].assign(phones.begin() + static_cast<long>(j - k), phones.begin() + static_cast<long>(j));
    j -= k;
  }
  return out;
}

std::string phone_group_label(const std::vector<std::string>& group) {
  if (group.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (k) out += "+";
    out += group[k];
  }
  return out;
}

std::vector<std::string> phone_group_from_label(std::string_view label) {
  if (label == "-" || label.empty()) return {};
  return utf8::split(label, '+');
}

}  // namespace lsk::processors
