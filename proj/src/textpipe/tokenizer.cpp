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

#include "lsk/textpipe/tokenizer.hpp"

#include <algorithm>

#include "lsk/common/utf8.hpp"

namespace lsk::textpipe {

namespace {

struct RawToken {
  std::string text;
  std::size_t begin = 0;  // byte offsets into the input
  std::size_t end = 0;
  bool ends_chunk = false;  // followed by whitespace or end of text
};

std::size_t encoded_size(char32_t cp) {
  if (cp < 0x80) return 1;
  if (cp < 0x800) return 2;
  if (cp < 0x10000) return 3;
  return 4;
}

std::vector<RawToken> split_tokens(std::string_view text) {
  std::vector<RawToken> out;
  const auto cps = utf8::decode(text);
  std::vector<std::size_t> offsets(cps.size() + 1, 0);
  for (std::size_t i = 0; i < cps.size(); ++i) offsets[i + 1] = offsets[i] + encoded_size(cps[i]);

  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && (utf8::is_space(cps[i]) || utf8::is_control(cps[i]))) ++i;
    std::size_t j = i;
    while (j < cps.size() && !utf8::is_space(cps[j]) && !utf8::is_control(cps[j])) ++j;
    if (j == i) break;
    // [i, j) is one whitespace-delimited chunk.
    std::size_t core_begin = i;
    std::size_t core_end = j;
    while (core_begin < core_end && utf8::is_punct(cps[core_begin])) ++core_begin;
    while (core_end > core_begin && utf8::is_punct(cps[core_end - 1])) --core_end;
    auto emit = [&](std::size_t a, std::size_t b) {
      RawToken t;
      t.begin = offsets[a];
      t.end = offsets[b];
      t.text = std::string(text.substr(t.begin, t.end - t.begin));
      out.push_back(std::move(t));
    };
    for (std::size_t k = i; k < core_begin; ++k) emit(k, k + 1);
    if (core_end > core_begin) emit(core_begin, core_end);
    for (std::size_t k = std::max(core_end, core_begin); k < j; ++k) emit(k, k + 1);
    out.back().ends_chunk = true;
    i = j;
  }
  return out;
}

bool starts_upper(std::string_view s) {
  const auto cps = utf8::decode(s);
  return !cps.empty() && utf8::is_upper(cps.front());
}

}  // namespace

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : split_tokens(text)) out.push_back(std::move(t.text));
  return out;
}

std::vector<Sentence> tokenize(std::string_view text, const TokenizerOptions& options,
                               std::size_t first_index) {
  const auto raw = split_tokens(text);
  std::vector<Sentence> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end <= start) return;
    Sentence s;
    s.id = options.id_prefix + std::to_string(first_index + out.size());
    s.raw = std::string(text.substr(raw[start].begin, raw[end - 1].end - raw[start].begin));
    for (std::size_t k = start; k < end; ++k) {
      Token t;
      t.wordform = raw[k].text;
      s.tokens.push_back(std::move(t));
    }
    out.push_back(std::move(s));
    start = end;
  };
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& t = raw[k].text;
    if (t != "." && t != "?" && t != "!") continue;
    if (!raw[k].ends_chunk || k + 1 >= raw.size()) continue;
    if (!starts_upper(raw[k + 1].text)) continue;
    if (t == "." && k > start) {
      const auto prev = utf8::casefold(raw[k - 1].text);
      const bool attached = raw[k - 1].end == raw[k].begin;
      if (attached && std::find(options.abbreviations.begin(), options.abbreviations.end(), prev) !=
                          options.abbreviations.end()) {
        continue;
      }
    }
    flush(k + 1);
  }
  flush(raw.size());
  return out;
}

}  // namespace lsk::textpipe
