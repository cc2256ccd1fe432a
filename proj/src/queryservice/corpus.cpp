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

#include "lsk/queryservice/corpus.hpp"

#include <json.hpp>

#include "lsk/common/error.hpp"

namespace lsk::queryservice {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::kCorpusFormat, what); }

std::string string_field(const json& o, const char* key, bool required) {
  const auto it = o.find(key);
  if (it == o.end()) {
    if (required) bad(std::string("missing \"") + key + "\"");
    return "";
  }
  if (!it->is_string()) bad(std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

std::int64_t int_field(const json& o, const char* key) {
  const auto& v = o.at(key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

CorpusUtterance from_json(const json& j) {
  if (!j.is_object()) bad("utterance must be a JSON object");
  CorpusUtterance u;
  u.id = string_field(j, "id", true);
  if (u.id.empty()) bad("empty \"id\"");
  u.group = string_field(j, "group", false);
  if (const auto a = j.find("audio"); a != j.end() && !a->is_null()) {
    if (!a->is_object()) bad("\"audio\" must be an object");
    u.audio_file = string_field(*a, "file", true);
    if (a->contains("offset_ms")) u.audio_offset_ms = int_field(*a, "offset_ms");
  }
  const auto toks = j.find("tokens");
  if (toks == j.end() || !toks->is_array()) bad("\"tokens\" must be an array");
  for (const auto& t : *toks) {
    if (!t.is_object()) bad("token must be an object");
    CorpusToken tok;
    tok.word = string_field(t, "word", true);
    tok.lemma = string_field(t, "lemma", false);
    tok.pos = string_field(t, "pos", false);
    const bool has_start = t.contains("start_ms"), has_end = t.contains("end_ms");
    if (has_start != has_end) bad("token \"" + tok.word + "\" needs both start_ms and end_ms");
    if (has_start) {
      tok.span = aligner::TimeSpan{int_field(t, "start_ms"), int_field(t, "end_ms")};
      if (tok.span->end_ms < tok.span->start_ms) bad("token \"" + tok.word + "\" ends before it starts");
    }
    u.tokens.push_back(std::move(tok));
  }
  return u;
}

json to_json(const CorpusUtterance& u) {
  json j;
  j["id"] = u.id;
  if (!u.group.empty()) j["group"] = u.group;
  if (!u.audio_file.empty()) j["audio"] = {{"file", u.audio_file}, {"offset_ms", u.audio_offset_ms}};
  json toks = json::array();
  for (const auto& t : u.tokens) {
    json o;
    o["word"] = t.word;
    if (!t.lemma.empty()) o["lemma"] = t.lemma;
    if (!t.pos.empty()) o["pos"] = t.pos;
    if (t.span) {
      o["start_ms"] = t.span->start_ms;
      o["end_ms"] = t.span->end_ms;
    }
    toks.push_back(std::move(o));
  }
  j["tokens"] = std::move(toks);
  return j;
}

}  // namespace

CorpusUtterance parse_utterance_json(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    bad(e.what());
  }
  return from_json(j);
}

std::vector<CorpusUtterance> read_corpus_jsonl(std::string_view text) {
  std::vector<CorpusUtterance> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(parse_utterance_json(line));
    } catch (const Error& e) {
      throw Error(Errc::kCorpusFormat, "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return out;
}

std::string utterance_json(const CorpusUtterance& u) { return to_json(u).dump(); }

std::string corpus_jsonl(std::span<const CorpusUtterance> utterances) {
  std::string out;
  for (const auto& u : utterances) {
    out += utterance_json(u);
    out += '\n';
  }
  return out;
}

CorpusUtterance from_aligned(const aligner::AlignedUtterance& u,
                             const textpipe::Sentence* annotation) {
  CorpusUtterance c;
  c.id = u.id;
  c.group = u.group;
  c.audio_file = u.audio_file;
  c.audio_offset_ms = u.audio_offset_ms;
  if (annotation && annotation->tokens.size() != u.tokens.size()) {
    bad("utterance " + u.id + ": annotation has " + std::to_string(annotation->tokens.size()) +
        " tokens, alignment has " + std::to_string(u.tokens.size()));
  }
  for (std::size_t i = 0; i < u.tokens.size(); ++i) {
    CorpusToken t;
    t.word = u.tokens[i];
    if (i < u.token_spans.size()) t.span = u.token_spans[i];
    if (annotation) {
      const auto& a = annotation->tokens[i];
      if (a.wordform != t.word) {
        bad("utterance " + u.id + ": token " + std::to_string(i + 1) + " is \"" + t.word +
            "\" in the alignment but \"" + a.wordform + "\" in the annotation");
      }
      t.lemma = a.lemma.value_or("");
      t.pos = a.pos.value_or("");
    }
    c.tokens.push_back(std::move(t));
  }
  return c;
}

}  // namespace lsk::queryservice
