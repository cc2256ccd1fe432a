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

#include "lsk/corpusforge/cleaning.hpp"

#include <cstdio>

#include "lsk/common/error.hpp"
#include "lsk/common/parallel.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/textpipe/tokenizer.hpp"

namespace lsk::corpusforge {

namespace {

constexpr double kEps = 1e-9;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string codepoint_name(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

// Drops leading and trailing whitespace and control characters.
std::u32string strip_edges(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::size_t b = 0, e = cps.size();
  auto junk = [](char32_t c) { return utf8::is_space(c) || utf8::is_control(c); };
  while (b < e && junk(cps[b])) ++b;
  while (e > b && junk(cps[e - 1])) --e;
  return cps.substr(b, e - b);
}

bool all_caps(const std::u32string& cps) {
  std::size_t upper = 0;
  for (char32_t c : cps) {
    if (utf8::is_lower(c)) return false;
    if (utf8::is_upper(c)) ++upper;
  }
  return upper >= 2;
}

bool capitalized(std::string_view word) {
  const auto cps = utf8::decode(word);
  return !cps.empty() && utf8::is_upper(cps.front());
}

}  // namespace

void CleaningConfig::validate() const {
  if (max_words < 1) throw Error(Errc::kInvalidArgument, "max words must be at least 1");
  for (double t : {lexicon_coverage, diacritics}) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::kInvalidArgument, "threshold outside [0,1]");
  }
  if (use_lexicon && lexicon == nullptr) {
    throw Error(Errc::kNoLexicon, "rules f, g and h need a lexicon");
  }
}

namespace {

struct Prepared {
  std::u32string body;
  std::string text;
  std::vector<std::string> tokens;
  std::vector<std::string> words;
  // Words minus the proper-noun proxy, with î->â already corrected.
  std::vector<std::string> judged;
};

Prepared prepare(std::string_view raw, const CleaningConfig& config) {
  const Lexicon* lex = config.use_lexicon ? config.lexicon : nullptr;
  Prepared p;
  p.body = strip_edges(raw);
  p.text = utf8::encode(p.body);
  p.tokens = textpipe::tokenize_words(p.text);
  for (const auto& t : p.tokens) {
    if (!utf8::is_punctuation_token(t)) p.words.push_back(t);
  }
  // Capitalized words other than the first are not judged by g and h.
  for (std::size_t i = 0; i < p.words.size(); ++i) {
    if (i > 0 && capitalized(p.words[i])) continue;
    p.judged.push_back(config.correct ? correct_diacritics(p.words[i], lex, config.prefixes)
                                      : p.words[i]);
  }
  return p;
}

std::optional<std::string> check(char rule, const Prepared& p, const CleaningConfig& config) {
  const Lexicon* lex = config.use_lexicon ? config.lexicon : nullptr;
  switch (rule) {
    case 'a':
      if (p.words.size() > config.max_words) {
        return std::to_string(p.words.size()) + " words > " + std::to_string(config.max_words);
      }
      return std::nullopt;
    case 'b':
      if (p.body.empty()) return "empty after trimming";
      for (char32_t c : p.body) {
        if (utf8::is_control(c)) return "non-printable " + codepoint_name(c);
      }
      return std::nullopt;
    case 'c':
      for (const auto& ch : config.forbidden_chars) {
        if (!ch.empty() && p.text.find(ch) != std::string::npos) return "character " + ch;
      }
      for (const auto& sub : config.forbidden_substrings) {
        if (!sub.empty() && p.text.find(sub) != std::string::npos) return "substring " + sub;
      }
      return std::nullopt;
    case 'd':
      for (char32_t c : p.body) {
        if (utf8::is_digit(c)) {
          std::string d;
          utf8::append(d, c);
          return "digit " + d;
        }
      }
      return std::nullopt;
    case 'e':
      if (all_caps(p.body)) return "all caps";
      return std::nullopt;
    case 'f': {
      if (p.words.size() >= 3) return std::nullopt;
      if (p.words.size() == 1 && lex && lex->contains(p.words.front())) return std::nullopt;
      return std::to_string(p.words.size()) + (p.words.size() == 1 ? " word" : " words");
    }
    case 'g': {
      if (!lex || p.judged.empty()) return std::nullopt;
      std::size_t covered = 0;
      for (const auto& w : p.judged) covered += lex->contains_stripped(w) ? 1 : 0;
      const double coverage = static_cast<double>(covered) / p.judged.size();
      if (coverage + kEps < config.lexicon_coverage) {
        return "coverage " + fixed2(coverage) + " < " + fixed2(config.lexicon_coverage);
      }
      return std::nullopt;
    }
    case 'h': {
      if (!lex || p.judged.empty()) return std::nullopt;
      std::size_t lacking = 0;
      for (const auto& w : p.judged) {
        if (!lex->contains(w) && lex->contains_stripped(w)) ++lacking;
      }
      const double lack = static_cast<double>(lacking) / p.judged.size();
      if (lack > 1.0 - config.diacritics + kEps) {
        return "lacking diacritics " + fixed2(lack) + " > " + fixed2(1.0 - config.diacritics);
      }
      return std::nullopt;
    }
    default:
      throw Error(Errc::kInvalidArgument, std::string("no cleaning rule '") + rule + "'");
  }
}

}  // namespace

std::optional<std::string> rule_verdict(char rule, std::string_view raw,
                                        const CleaningConfig& config) {
  return check(rule, prepare(raw, config), config);
}

std::optional<AuditEntry> first_rejection(CandidateSentence& s, const CleaningConfig& config) {
  auto p = prepare(s.raw, config);
  s.tokens = p.tokens;
  for (char rule : kRejectRules) {
    if (auto evidence = check(rule, p, config)) return AuditEntry{s.id, rule, std::move(*evidence)};
  }
  return std::nullopt;
}

namespace {

struct Verdict {
  CandidateSentence sentence;
  std::optional<AuditEntry> rejection;
  std::vector<AuditEntry> corrections;
};

Verdict judge(const CandidateSentence& in, const CleaningConfig& config) {
  Verdict v{in, {}, {}};
  v.sentence.rejection.reset();
  v.rejection = first_rejection(v.sentence, config);
  if (v.rejection) {
    v.sentence.rejection = v.rejection->rule;
    return v;
  }
  if (!config.correct) return v;
  const Lexicon* lex = config.use_lexicon ? config.lexicon : nullptr;
  // The kept text is the trimmed line; î and â have the same UTF-8 length,
  // so corrections are patched in place.
  std::string text = utf8::encode(strip_edges(v.sentence.raw));
  std::size_t cursor = 0;
  for (auto& tok : v.sentence.tokens) {
    const auto at = text.find(tok, cursor);
    auto fixed = correct_diacritics(tok, lex, config.prefixes);
    if (at != std::string::npos) cursor = at + tok.size();
    if (fixed == tok) continue;
    v.corrections.push_back({v.sentence.id, 'i', tok + "→" + fixed});
    if (at != std::string::npos) text.replace(at, tok.size(), fixed);
    tok = std::move(fixed);
  }
  v.sentence.raw = std::move(text);
  return v;
}

CleanResult collect(std::vector<Verdict>& verdicts) {
  CleanResult out;
  for (auto& v : verdicts) {
    if (v.rejection) {
      out.audit.push_back(*v.rejection);
      out.rejected.push_back(std::move(v.sentence));
    } else {
      for (auto& c : v.corrections) out.audit.push_back(std::move(c));
      out.kept.push_back(std::move(v.sentence));
    }
  }
  return out;
}

}  // namespace

CleanResult clean(std::span<const CandidateSentence> sentences, const CleaningConfig& config) {
  config.validate();
  std::vector<Verdict> verdicts;
  verdicts.reserve(sentences.size());
  for (const auto& s : sentences) verdicts.push_back(judge(s, config));
  return collect(verdicts);
}

CleanResult clean_parallel(std::span<const CandidateSentence> sentences,
                           const CleaningConfig& config, int jobs) {
  config.validate();
  std::vector<Verdict> verdicts(sentences.size());
  parallel_for(sentences.size(), jobs,
               [&](std::size_t i) { verdicts[i] = judge(sentences[i], config); });
  return collect(verdicts);
}

std::string correct_diacritics(std::string_view word, const Lexicon* lexicon,
                               std::span<const std::string> prefixes) {
  auto cps = utf8::decode(word);
  const std::size_t n = cps.size();
  auto is_i_circ = [](char32_t c) { return c == U'î' || c == U'Î'; };
  auto to_a = [](char32_t c) { return c == U'Î' ? U'Â' : U'â'; };

  bool any = false;
  std::u32string all = cps;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (is_i_circ(cps[k])) {
      all[k] = to_a(cps[k]);
      any = true;
    }
  }
  if (!any) return std::string(word);
  const auto all_utf8 = utf8::encode(all);
  if (lexicon && lexicon->contains(all_utf8)) return all_utf8;

  const auto folded = utf8::decode(utf8::casefold(word));
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (!is_i_circ(cps[k])) continue;
    bool protected_ = false;
    for (const auto& p : prefixes) {
      const auto pc = utf8::decode(utf8::casefold(p));
      if (pc.size() == k && folded.compare(0, k, pc) == 0) {
        protected_ = true;
        break;
      }
    }
    if (!protected_) cps[k] = to_a(cps[k]);
  }
  return utf8::encode(cps);
}

std::vector<CandidateSentence> read_lines(std::string_view text) {
  std::vector<CandidateSentence> out;
  std::size_t line_no = 0;
  for (const auto& line : utf8::split(text, '\n')) {
    ++line_no;
    std::string raw = line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (utf8::trim(raw).empty()) continue;
    CandidateSentence s;
    s.id = std::to_string(line_no);
    s.raw = std::move(raw);
    out.push_back(std::move(s));
  }
  return out;
}

std::string audit_tsv(std::span<const AuditEntry> audit) {
  std::string out;
  for (const auto& a : audit) {
    out += a.id;
    out += '\t';
    out += a.rule;
    out += '\t';
    out += a.evidence;
    out += '\n';
  }
  return out;
}

}  // namespace lsk::corpusforge
