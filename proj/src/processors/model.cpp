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

#include "lsk/processors/model.hpp"

#include <algorithm>
#include <limits>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/processors/features.hpp"
#include "lsk/processors/parser.hpp"

namespace lsk::processors {

using textpipe::Sentence;
using textpipe::Span;
using textpipe::Token;

Bytes TaskModel::to_bytes() const {
  ByteWriter head;
  head.str(task_name(task));
  head.str(template_id);
  ByteWriter body;
  classifier.write(body);
  return write_container('P', {std::move(head).take(), std::move(body).take()});
}

TaskModel TaskModel::from_bytes(std::span<const std::uint8_t> file) {
  auto c = read_container(file, 'P');
  if (c.sections.size() != 2) throw Error(Errc::kModelFormat, "expected 2 sections at byte offset 6");
  TaskModel m;
  auto h = c.sections[0].reader();
  const auto at = h.offset();
  const auto name = h.str();
  const auto task = parse_task(name);
  if (!task) throw Error(Errc::kModelFormat, "unknown task '" + name + "' at byte offset " + std::to_string(at));
  m.task = *task;
  const auto tid_at = h.offset();
  m.template_id = h.str();
  if (m.template_id != processors::template_id(m.task)) {
    throw Error(Errc::kModelFormat, "unsupported template '" + m.template_id + "' at byte offset " +
                                        std::to_string(tid_at));
  }
  h.expect_end();
  auto b = c.sections[1].reader();
  m.classifier = Classifier::read(b);
  b.expect_end();
  return m;
}

void TaskModel::save(const std::string& path) const { write_binary_file(path, to_bytes()); }

TaskModel TaskModel::load(const std::string& path) { return from_bytes(read_binary_file(path)); }

namespace {

[[noreturn]] void gold_missing(const Sentence& s, std::size_t i, std::string_view what) {
  throw Error(Errc::kGoldMissing,
              s.id + " token " + std::to_string(i + 1) + " has no gold " + std::string(what));
}

bool word_token(const Token& t) { return !textpipe::is_punctuation(t); }

void require_attr(const Sentence& s, textpipe::Attribute a, std::string_view stage,
                  bool words_only) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const auto& t = s.tokens[i];
    if (words_only && !word_token(t)) continue;
    if (!t.has(a)) {
      throw Error(Errc::kStageDependency,
                  std::string(stage) + " requires " + std::string(textpipe::attribute_name(a)) +
                      " on " + s.id + " token " + std::to_string(i + 1));
    }
  }
}

std::vector<std::size_t> syllable_boundaries(const Token& t) {
  std::vector<std::size_t> begins;
  for (const auto& sp : *t.syllables) begins.push_back(sp.begin);
  return begins;
}

// Indices of syllables containing a vowel: the stress candidates.
std::vector<std::size_t> stress_candidates(const std::vector<std::string>& syllables) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < syllables.size(); ++k) {
    if (utf8::has_vowel(syllables[k])) out.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<Instance> extract_instances(Task task, std::span<const Sentence> corpus,
                                        std::vector<std::string>* warnings) {
  std::vector<Instance> out;
  for (const auto& s : corpus) {
    const auto n = s.tokens.size();
    switch (task) {
      case Task::kTag: {
        std::vector<std::string> tags;
        for (std::size_t i = 0; i < n; ++i) {
          if (!s.tokens[i].pos) gold_missing(s, i, "pos");
          tags.push_back(*s.tokens[i].pos);
        }
        for (std::size_t i = 0; i < n; ++i) out.push_back({tagger_features(s, i, tags), tags[i]});
        break;
      }
      case Task::kLemma:
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = s.tokens[i];
          if (!t.pos) gold_missing(s, i, "pos");
          if (!t.lemma) gold_missing(s, i, "lemma");
          out.push_back({lemma_features(s, i), induce_rule(t.wordform, *t.lemma).label()});
        }
        break;
      case Task::kChunk:
        for (std::size_t i = 0; i < n; ++i) {
          if (!s.tokens[i].pos) gold_missing(s, i, "pos");
          if (!s.tokens[i].chunk) gold_missing(s, i, "chunk");
          out.push_back({chunk_features(s, i), *s.tokens[i].chunk});
        }
        break;
      case Task::kParse: {
        std::vector<std::size_t> heads;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = s.tokens[i];
          if (!t.pos) gold_missing(s, i, "pos");
          if (!t.dep_head || !t.dep_label) gold_missing(s, i, "dependency");
          heads.push_back(*t.dep_head);
          labels.push_back(*t.dep_label);
        }
        std::vector<Transition> seq;
        try {
          seq = parser_oracle(heads, labels);
        } catch (const Error& e) {
          if (e.code() != Errc::kNonProjective && e.code() != Errc::kInvalidTree) throw;
          if (warnings) warnings->push_back(s.id + " skipped: " + std::string(e.what()));
          break;
        }
        ParserState state(n);
        for (const auto& t : seq) {
          out.push_back({parser_features(state, s), t.name()});
          state.apply(t);
        }
        break;
      }
      case Task::kSyllabify:
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = s.tokens[i];
          if (!word_token(t)) continue;
          if (!t.syllables) gold_missing(s, i, "syllables");
          const auto chars = utf8::decode(t.wordform);
          const auto begins = syllable_boundaries(t);
          for (std::size_t k = 0; k < chars.size(); ++k) {
            const bool boundary =
                std::find(begins.begin(), begins.end(), k + 1) != begins.end() && k + 1 < chars.size();
            out.push_back({char_window(chars, k), boundary ? "B" : "O"});
          }
        }
        break;
      case Task::kLts:
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = s.tokens[i];
          if (!word_token(t)) continue;
          if (!t.transcription) gold_missing(s, i, "transcription");
          const auto chars = utf8::decode(utf8::casefold(t.wordform));
          const auto groups = align_letters(chars, *t.transcription);
          for (std::size_t k = 0; k < chars.size(); ++k) {
            out.push_back({char_window(chars, k), phone_group_label(groups[k])});
          }
        }
        break;
      case Task::kStress:
        for (std::size_t i = 0; i < n; ++i) {
          const auto& t = s.tokens[i];
          if (!word_token(t)) continue;
          if (!t.syllables) gold_missing(s, i, "syllables");
          const auto syl = textpipe::syllable_texts(t);
          const auto cand = stress_candidates(syl);
          if (cand.empty()) continue;
          if (!t.stress) gold_missing(s, i, "stress");
          for (auto k : cand) out.push_back({stress_features(syl, k), k == *t.stress ? "S" : "U"});
        }
        break;
    }
  }
  if (out.empty()) {
    throw Error(Errc::kGoldMissing,
                "no training instances for task " + std::string(task_name(task)));
  }
  return out;
}

TaskModel train_processor(Task task, std::span<const Sentence> corpus, const TrainSpec& spec,
                          TrainReport* report) {
  std::vector<std::string> warnings;
  const auto data = extract_instances(task, corpus, &warnings);
  TaskModel m;
  m.task = task;
  m.template_id = std::string(processors::template_id(task));
  m.classifier = Classifier::train(spec.backend, data, spec.options);
  if (report) {
    report->instances = data.size();
    report->warnings = std::move(warnings);
  }
  return m;
}

namespace {

void apply_parse(const Classifier& c, Sentence& s) {
  const auto n = s.tokens.size();
  ParserState state(n);
  while (!state.terminal()) {
    const auto x = parser_features(state, s);
    bool moved = false;
    for (const auto& name : c.ranked(x)) {
      const auto t = Transition::from_name(name);
      if (state.legal(t)) {
        state.apply(t);
        moved = true;
        break;
      }
    }
    if (!moved) {
      // No learned transition is legal here; fall back to a neutral move.
      if (state.can_shift()) {
        state.apply({Transition::kShift, ""});
      } else {
        state.apply({Transition::kRightArc, state.stack(1) == 0 ? "root" : "dep"});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.tokens[i].dep_head = state.heads()[i];
    s.tokens[i].dep_label = state.labels()[i];
  }
}

}  // namespace

void apply_processor(const TaskModel& model, Sentence& s) {
  const auto key = stage_key(model.task);
  const auto& c = model.classifier;
  const auto n = s.tokens.size();
  switch (model.task) {
    case Task::kTag: {
      std::vector<std::string> tags(n);
      for (std::size_t i = 0; i < n; ++i) tags[i] = c.predict(tagger_features(s, i, tags));
      for (std::size_t i = 0; i < n; ++i) s.tokens[i].pos = tags[i];
      break;
    }
    case Task::kLemma: {
      require_attr(s, textpipe::Attribute::kPos, key, false);
      std::vector<std::string> lemmas(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto label = c.predict(lemma_features(s, i));
        try {
          lemmas[i] = LemmaRule::from_label(label).apply(s.tokens[i].wordform);
        } catch (const Error&) {
          lemmas[i] = s.tokens[i].wordform;
        }
      }
      for (std::size_t i = 0; i < n; ++i) s.tokens[i].lemma = lemmas[i];
      break;
    }
    case Task::kChunk: {
      require_attr(s, textpipe::Attribute::kPos, key, false);
      std::vector<std::string> tags(n);
      for (std::size_t i = 0; i < n; ++i) tags[i] = c.predict(chunk_features(s, i));
      for (std::size_t i = 0; i < n; ++i) s.tokens[i].chunk = tags[i];
      break;
    }
    case Task::kParse:
      require_attr(s, textpipe::Attribute::kPos, key, false);
      apply_parse(c, s);
      break;
    case Task::kSyllabify:
      for (auto& t : s.tokens) {
        const auto chars = utf8::decode(t.wordform);
        std::vector<Span> spans;
        std::size_t begin = 0;
        if (word_token(t)) {
          for (std::size_t k = 0; k + 1 < chars.size(); ++k) {
            if (c.predict(char_window(chars, k)) == "B") {
              spans.push_back({begin, k + 1});
              begin = k + 1;
            }
          }
        }
        spans.push_back({begin, chars.size()});
        t.syllables = std::move(spans);
      }
      break;
    case Task::kLts:
      for (auto& t : s.tokens) {
        if (!word_token(t)) continue;
        const auto chars = utf8::decode(utf8::casefold(t.wordform));
        std::vector<std::string> phones;
        for (std::size_t k = 0; k < chars.size(); ++k) {
          for (auto& p : phone_group_from_label(c.predict(char_window(chars, k)))) {
            phones.push_back(std::move(p));
          }
        }
        t.transcription = std::move(phones);
      }
      break;
    case Task::kStress: {
      require_attr(s, textpipe::Attribute::kSyllables, key, true);
      for (auto& t : s.tokens) {
        if (!t.syllables) continue;
        const auto syl = textpipe::syllable_texts(t);
        const auto cand = stress_candidates(syl);
        if (cand.empty()) continue;
        std::size_t best = cand.front();
        if (cand.size() > 1) {
          double best_score = -std::numeric_limits<double>::infinity();
          for (auto k : cand) {
            const auto x = stress_features(syl, k);
            const double score = c.value(x, "S") - c.value(x, "U");
            if (score > best_score) {
              best_score = score;
              best = k;
            }
          }
        }
        t.stress = best;
      }
      break;
    }
  }
}

}  // namespace lsk::processors
