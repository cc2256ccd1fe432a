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

#include "lsk/textpipe/tsv.hpp"

#include <charconv>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::textpipe {

namespace {

constexpr std::string_view kEmpty = "_";

std::string or_empty(const std::optional<std::string>& v) {
  return v && !v->empty() ? *v : std::string(kEmpty);
}

std::optional<std::string> opt(const std::string& cell) {
  if (cell == kEmpty) return std::nullopt;
  return cell;
}

std::optional<std::size_t> opt_index(const std::string& cell, std::size_t line) {
  if (cell == kEmpty) return std::nullopt;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size()) {
    throw Error(Errc::kTsvFormat, "line " + std::to_string(line) + ": bad integer '" + cell + "'");
  }
  return v;
}

}  // namespace

std::string format_tsv_row(const Token& t) {
  std::string row = t.wordform;
  row += '\t' + or_empty(t.lemma);
  row += '\t' + or_empty(t.pos);
  row += '\t' + or_empty(t.chunk);
  row += '\t' + (t.dep_head ? std::to_string(*t.dep_head) : std::string(kEmpty));
  row += '\t' + or_empty(t.dep_label);
  row += '\t';
  if (t.transcription && !t.transcription->empty()) {
    for (std::size_t i = 0; i < t.transcription->size(); ++i) {
      if (i) row += ' ';
      row += (*t.transcription)[i];
    }
  } else {
    row += kEmpty;
  }
  row += '\t';
  if (t.syllables) {
    const auto parts = syllable_texts(t);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) row += '|';
      row += parts[i];
    }
  } else {
    row += kEmpty;
  }
  row += '\t' + (t.stress ? std::to_string(*t.stress) : std::string(kEmpty));
  return row;
}

std::string format_tsv(std::span<const Sentence> sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out += '\n';
    for (const auto& t : sentences[i].tokens) {
      out += format_tsv_row(t);
      out += '\n';
    }
  }
  return out;
}

std::vector<Sentence> read_tsv(std::string_view text) {
  std::vector<Sentence> out;
  Sentence current;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.id = "s" + std::to_string(out.size() + 1);
    for (std::size_t i = 0; i < current.tokens.size(); ++i) {
      if (i) current.raw += ' ';
      current.raw += current.tokens[i].wordform;
    }
    out.push_back(std::move(current));
    current = Sentence{};
  };
  std::size_t line_no = 0;
  for (auto line : utf8::split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    auto cells = utf8::split(line, '\t');
    if (cells.size() != kTsvColumns) {
      throw Error(Errc::kTsvFormat, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(kTsvColumns) + " columns, found " +
                                        std::to_string(cells.size()));
    }
    Token t;
    t.wordform = cells[0];
    t.lemma = opt(cells[1]);
    t.pos = opt(cells[2]);
    t.chunk = opt(cells[3]);
    t.dep_head = opt_index(cells[4], line_no);
    t.dep_label = opt(cells[5]);
    if (cells[6] != kEmpty) t.transcription = utf8::split_whitespace(cells[6]);
    if (cells[7] != kEmpty) {
      auto spans = spans_from_parts(t.wordform, utf8::split(cells[7], '|'));
      if (!spans) {
        throw Error(Errc::kTsvFormat, "line " + std::to_string(line_no) + ": syllables '" +
                                          cells[7] + "' do not spell '" + t.wordform + "'");
      }
      t.syllables = std::move(spans);
    }
    t.stress = opt_index(cells[8], line_no);
    current.tokens.push_back(std::move(t));
  }
  flush();
  for (const auto& s : out) {
    try {
      validate(s);
    } catch (const Error& e) {
      throw Error(Errc::kTsvFormat, e.detail());
    }
  }
  return out;
}

}  // namespace lsk::textpipe
