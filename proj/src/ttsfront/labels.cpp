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

#include "lsk/ttsfront/labels.hpp"

#include <cstdio>
#include <optional>

#include "lsk/common/error.hpp"
#include "lsk/common/parallel.hpp"
#include "lsk/common/phones.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/processors/features.hpp"

namespace lsk::ttsfront {

using textpipe::Sentence;
using textpipe::Token;

namespace {

constexpr const char* kNone = "x";

std::string ratio(std::size_t ord, std::size_t total) {
  return std::to_string(ord) + ":" + std::to_string(total);
}

bool is_word(const Token& t) { return !textpipe::is_punctuation(t); }

void require(const Token& t, bool ok, const char* attr) {
  if (!ok) {
    throw Error(Errc::kStageDependency, "token '" + t.wordform + "' lacks " + attr +
                                            ", needed for context labels");
  }
}

// Everything a label needs to know about one phone.
struct PhoneInfo {
  std::string phone;
  std::optional<std::size_t> token;      // word token, unset for silences
  std::size_t syl_in_word = 0;           // 0-based
  std::size_t syl_global = 0;            // 0-based
  std::string prev_punct = kNone;
  std::string next_punct = kNone;
  std::optional<std::size_t> prev_word;  // for silences: words around the pause
  std::optional<std::size_t> next_word;
};

}  // namespace

std::uint64_t SyllableFreqTable::count(std::string_view syllable) const {
  auto it = counts.find(utf8::casefold(syllable));
  return it == counts.end() ? 0 : it->second;
}

bool SyllableFreqTable::frequent(std::string_view syllable) const {
  return count(syllable) >= threshold;
}

SyllableFreqTable syllable_freq_table(std::span<const Sentence> corpus, std::uint64_t threshold) {
  SyllableFreqTable table;
  table.threshold = threshold;
  for (const auto& s : corpus) {
    for (const auto& t : s.tokens) {
      if (!is_word(t)) continue;
      if (!t.syllables) {
        throw Error(Errc::kGoldMissing, "sentence " + s.id + ": token '" + t.wordform +
                                            "' is not syllabified");
      }
      for (const auto& syl : textpipe::syllable_texts(t)) ++table.counts[utf8::casefold(syl)];
    }
  }
  return table;
}

ArticulatoryMap ArticulatoryMap::defaults() {
  ArticulatoryMap m;
  for (const auto& p : phones::default_inventory()) {
    const auto a = phones::articulation(p);
    m.set(p, {std::string(a.cls), std::string(a.place), std::string(a.manner),
              std::string(a.voicing)});
  }
  return m;
}

ArticulatoryMap ArticulatoryMap::parse(std::string_view text) {
  auto m = defaults();
  std::size_t line_no = 0;
  for (const auto& line : utf8::split(text, '\n')) {
    ++line_no;
    if (utf8::trim(line).empty() || line[0] == '#') continue;
    const auto f = utf8::split(line, '\t');
    if (f.size() != 5) {
      throw Error(Errc::kCorpusFormat, "articulation row needs 5 fields at line " +
                                           std::to_string(line_no));
    }
    m.set(f[0], {f[1], f[2], f[3], f[4]});
  }
  return m;
}

ArticulatoryMap::Entry ArticulatoryMap::lookup(std::string_view phone) const {
  auto it = entries_.find(phone);
  if (it == entries_.end()) return {kNone, kNone, kNone, kNone};
  return it->second;
}

std::string ContextLabel::render() const {
  std::string out;
  for (const auto& f : features) {
    if (!out.empty()) out += '/';
    out += f;
  }
  if (state > 0) out += "/S=" + std::to_string(state);
  return out;
}

std::string escape_value(std::string_view value) {
  std::string out;
  for (unsigned char c : value) {
    if (c == '%' || c == '/' || c == '=' || c <= ' ' || c == 0x7F) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out.empty() ? std::string(kNone) : out;
}

namespace {

std::vector<PhoneInfo> phone_infos(const Sentence& s, const LabelOptions& options) {
  const auto& toks = s.tokens;
  std::vector<std::size_t> first_syl(toks.size(), 0);
  std::size_t total_syl = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    first_syl[i] = total_syl;
    if (is_word(toks[i])) total_syl += toks[i].syllables->size();
  }
  auto prev_punct_before = [&](std::size_t i) {
    for (std::size_t k = i; k-- > 0;) {
      if (!is_word(toks[k])) return toks[k].wordform;
    }
    return std::string(kNone);
  };
  auto first_punct_from = [&](std::size_t i) {
    for (std::size_t k = i; k < toks.size(); ++k) {
      if (!is_word(toks[k])) return toks[k].wordform;
    }
    return std::string(kNone);
  };
  auto prev_word_before = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t k = i; k-- > 0;) {
      if (is_word(toks[k])) return k;
    }
    return std::nullopt;
  };
  auto next_word_from = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t k = i; k < toks.size(); ++k) {
      if (is_word(toks[k])) return k;
    }
    return std::nullopt;
  };

  std::vector<PhoneInfo> out;
  auto silence = [&](std::size_t at, std::string prev, std::string next) {
    PhoneInfo p;
    p.phone = options.silence;
    p.prev_punct = std::move(prev);
    p.next_punct = std::move(next);
    p.prev_word = prev_word_before(at);
    p.next_word = next_word_from(at);
    out.push_back(std::move(p));
  };

  // Leading punctuation merges into the initial pause, trailing punctuation
  // into the final one; any other run of punctuation becomes one pause.
  std::size_t i = 0;
  while (i < toks.size() && !is_word(toks[i])) ++i;
  silence(i, i > 0 ? toks[i - 1].wordform : kNone, first_punct_from(i));
  while (i < toks.size()) {
    if (!is_word(toks[i])) {
      std::size_t j = i;
      while (j < toks.size() && !is_word(toks[j])) ++j;
      if (j == toks.size()) break;
      silence(j, toks[j - 1].wordform, first_punct_from(j));
      i = j;
      continue;
    }
    const auto& t = toks[i];
    const auto groups = processors::align_letters(utf8::decode(utf8::casefold(t.wordform)),
                                                  *t.transcription);
    const auto& spans = *t.syllables;
    std::size_t syl = 0;
    for (std::size_t letter = 0; letter < groups.size(); ++letter) {
      while (syl + 1 < spans.size() && letter >= spans[syl].end) ++syl;
      for (const auto& ph : groups[letter]) {
        PhoneInfo p;
        p.phone = ph;
        p.token = i;
        p.syl_in_word = syl;
        p.syl_global = first_syl[i] + syl;
        p.prev_punct = prev_punct_before(i);
        p.next_punct = first_punct_from(i + 1);
        out.push_back(std::move(p));
      }
    }
    ++i;
  }
  silence(toks.size(), prev_punct_before(toks.size()), kNone);
  return out;
}

}  // namespace

std::vector<std::string> label_phones(const Sentence& sentence, const LabelOptions& options) {
  for (const auto& t : sentence.tokens) {
    if (!is_word(t)) continue;
    require(t, t.transcription.has_value(), "transcription");
    require(t, t.syllables.has_value(), "syllables");
  }
  std::vector<std::string> out;
  for (auto& p : phone_infos(sentence, options)) out.push_back(std::move(p.phone));
  return out;
}

std::vector<ContextLabel> build_labels(const Sentence& s, const SyllableFreqTable& syllables,
                                       const ArticulatoryMap& articulation,
                                       const LabelOptions& options) {
  const auto& toks = s.tokens;
  for (const auto& t : toks) {
    if (!is_word(t)) continue;
    require(t, t.transcription.has_value(), "transcription");
    require(t, t.syllables.has_value() && !t.syllables->empty(), "syllables");
    require(t, t.stress.has_value(), "stress");
    require(t, t.pos.has_value(), "pos");
    require(t, t.chunk.has_value(), "chunk");
  }
  if (options.state_level && options.states < 1) {
    throw Error(Errc::kInvalidArgument, "state count must be positive");
  }

  // Sentence-level facts.
  std::size_t words = 0, total_syl = 0;
  for (const auto& t : toks) {
    if (!is_word(t)) continue;
    ++words;
    total_syl += t.syllables->size();
  }
  std::string type = "decl";
  for (std::size_t k = toks.size(); k-- > 0;) {
    if (is_word(toks[k])) break;
    if (toks[k].wordform.find('?') != std::string::npos) type = "int";
    else if (toks[k].wordform.find('!') != std::string::npos && type == "decl") type = "excl";
  }

  // Syllable distances to punctuation, sentence edges acting as anchors.
  std::vector<std::size_t> from_prev(total_syl), to_next(total_syl);
  {
    std::size_t g = 0, run = 0;
    for (const auto& t : toks) {
      if (!is_word(t)) {
        run = 0;
        continue;
      }
      for (std::size_t k = 0; k < t.syllables->size(); ++k) from_prev[g++] = ++run;
    }
    run = 0;
    g = total_syl;
    for (std::size_t i = toks.size(); i-- > 0;) {
      if (!is_word(toks[i])) {
        run = 0;
        continue;
      }
      for (std::size_t k = 0; k < toks[i].syllables->size(); ++k) to_next[--g] = ++run;
    }
  }

  // Chunks over word tokens from BIO tags.
  struct ChunkPos {
    std::size_t word_ord = 0, words = 0, syl_first = 0, syls = 0;
    bool in = false;
  };
  std::vector<ChunkPos> chunk(toks.size());
  {
    std::vector<std::size_t> members;
    auto close = [&] {
      std::size_t syls = 0;
      for (auto m : members) syls += toks[m].syllables->size();
      std::size_t before = 0;
      for (std::size_t k = 0; k < members.size(); ++k) {
        chunk[members[k]] = {k + 1, members.size(), before, syls, true};
        before += toks[members[k]].syllables->size();
      }
      members.clear();
    };
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (!is_word(toks[i])) continue;
      const auto& tag = *toks[i].chunk;
      if (tag.rfind("B", 0) == 0) {
        close();
        members.push_back(i);
      } else if (tag.rfind("I", 0) == 0) {
        members.push_back(i);
      } else {
        close();
      }
    }
    close();
  }

  const auto infos = phone_infos(s, options);
  const auto n = infos.size();
  auto pos_of = [&](std::optional<std::size_t> t) {
    return t ? escape_value(*toks[*t].pos) : std::string(kNone);
  };

  std::vector<ContextLabel> out;
  out.reserve(n * (options.state_level ? options.states : 1));
  static constexpr const char* kWindow[] = {"P2", "P1", "P0", "N1", "N2"};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = infos[i];
    ContextLabel label;
    label.phone = p.phone;
    auto& f = label.features;
    auto add = [&](std::string_view key, const std::string& value) {
      f.push_back(std::string(key) + "=" + value);
    };
    std::string window[5];
    for (int k = 0; k < 5; ++k) {
      const auto at = static_cast<std::ptrdiff_t>(i) + k - 2;
      window[k] = at < 0 || at >= static_cast<std::ptrdiff_t>(n) ? std::string(kNone)
                                                                 : infos[at].phone;
      add(kWindow[k], escape_value(window[k]));
    }
    for (int k = 0; k < 5; ++k) {
      const auto a = articulation.lookup(window[k]);
      const std::string key = kWindow[k];
      add(key + "cls", escape_value(a.cls));
      add(key + "pl", escape_value(a.place));
      add(key + "mn", escape_value(a.manner));
      add(key + "vc", escape_value(a.voicing));
    }
    if (p.token) {
      const auto& t = toks[*p.token];
      const auto syl_text = textpipe::syllable_texts(t)[p.syl_in_word];
      if (syllables.frequent(syl_text)) add("FS", escape_value(utf8::casefold(syl_text)));
      add("STR", *t.stress == p.syl_in_word ? "1" : "0");
      add("SW", ratio(p.syl_in_word + 1, t.syllables->size()));
      add("SS", ratio(p.syl_global + 1, total_syl));
    } else {
      add("STR", kNone);
      add("SW", kNone);
      add("SS", kNone);
    }
    add("NS", std::to_string(total_syl));
    add("DPP", p.token ? std::to_string(from_prev[p.syl_global]) : kNone);
    add("DNP", p.token ? std::to_string(to_next[p.syl_global]) : kNone);
    add("ST", type);
    add("PP", escape_value(p.prev_punct));
    add("NP", escape_value(p.next_punct));
    add("NW", std::to_string(words));
    if (p.token) {
      std::optional<std::size_t> prev, next;
      for (std::size_t k = *p.token; k-- > 0;) {
        if (is_word(toks[k])) {
          prev = k;
          break;
        }
      }
      for (std::size_t k = *p.token + 1; k < toks.size(); ++k) {
        if (is_word(toks[k])) {
          next = k;
          break;
        }
      }
      add("PPOS", pos_of(prev));
      add("CPOS", pos_of(p.token));
      add("NPOS", pos_of(next));
      const auto& c = chunk[*p.token];
      add("WCH", c.in ? ratio(c.word_ord, c.words) : kNone);
      add("SCH", c.in ? ratio(c.syl_first + p.syl_in_word + 1, c.syls) : kNone);
    } else {
      add("PPOS", pos_of(p.prev_word));
      add("CPOS", kNone);
      add("NPOS", pos_of(p.next_word));
      add("WCH", kNone);
      add("SCH", kNone);
    }
    if (options.state_level) {
      for (int st = 1; st <= options.states; ++st) {
        label.state = st;
        out.push_back(label);
      }
    } else {
      out.push_back(std::move(label));
    }
  }
  return out;
}

std::vector<std::vector<ContextLabel>> build_labels_all(std::span<const Sentence> corpus,
                                                        const SyllableFreqTable& syllables,
                                                        const ArticulatoryMap& articulation,
                                                        const LabelOptions& options, int jobs) {
  std::vector<std::vector<ContextLabel>> out(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    out[i] = build_labels(corpus[i], syllables, articulation, options);
  });
  return out;
}

std::string label_file(std::span<const std::vector<ContextLabel>> utterances) {
  std::string out;
  for (std::size_t u = 0; u < utterances.size(); ++u) {
    if (u > 0) out += '\n';
    for (const auto& l : utterances[u]) out += l.render() + '\n';
  }
  return out;
}

std::vector<std::vector<std::vector<std::string>>> read_label_file(std::string_view text) {
  std::vector<std::vector<std::vector<std::string>>> out;
  bool fresh = true;
  for (const auto& line : utf8::split(text, '\n')) {
    if (utf8::trim(line).empty()) {
      fresh = true;
      continue;
    }
    if (fresh) out.emplace_back();
    fresh = false;
    out.back().push_back(utf8::split(line, '/'));
  }
  return out;
}

}  // namespace lsk::ttsfront
