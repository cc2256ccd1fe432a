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

#include "lsk/queryservice/query.hpp"

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::queryservice {

namespace {

bool glob_at(std::u32string_view p, std::u32string_view t) {
  // Iterative matcher with single-star backtracking.
  std::size_t i = 0, j = 0, star = std::u32string_view::npos, mark = 0;
  while (j < t.size()) {
    if (i < p.size() && (p[i] == U'.' || p[i] == t[j])) {
      ++i;
      ++j;
    } else if (i < p.size() && p[i] == U'*') {
      star = i++;
      mark = j;
    } else if (star != std::u32string_view::npos) {
      i = star + 1;
      j = ++mark;
    } else {
      return false;
    }
  }
  while (i < p.size() && p[i] == U'*') ++i;
  return i == p.size();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(utf8::decode(text)) {}

  Query parse() {
    Query q;
    skip_ws();
    if (at_end()) throw Error(Errc::kQueryEmpty, "query has no token pattern");
    while (!at_end()) {
      q.patterns.push_back(pattern());
      skip_ws();
    }
    return q;
  }

 private:
  TokenPattern pattern() {
    const auto open = pos_;
    expect(U'[');
    TokenPattern p;
    skip_ws();
    bool any = false;
    while (!at_end() && peek() != U']') {
      const auto name_col = pos_;
      std::string name;
      while (!at_end() && utf8::is_letter(peek())) name += static_cast<char>(next());
      if (name.empty()) fail("expected an attribute name");
      std::optional<std::string>* slot = nullptr;
      if (name == "word") slot = &p.word;
      else if (name == "lemma") slot = &p.lemma;
      else if (name == "pos") slot = &p.pos;
      else fail_at(name_col, "unknown attribute '" + name + "'");
      if (slot->has_value()) fail_at(name_col, "attribute '" + name + "' given twice");
      skip_ws();
      expect(U'=');
      skip_ws();
      auto value = quoted();
      *slot = name == "pos" ? value : utf8::casefold(value);
      any = true;
      skip_ws();
    }
    if (at_end()) fail_at(open, "unclosed '['");
    ++pos_;
    if (!any) {
      throw Error(Errc::kQueryEmpty, "empty token pattern at column " + std::to_string(open + 1));
    }
    return p;
  }

  std::string quoted() {
    expect(U'"');
    std::u32string v;
    const auto start = pos_ - 1;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string");
      char32_t c = next();
      if (c == U'"') break;
      if (c == U'\\') {
        if (at_end() || (peek() != U'"' && peek() != U'\\')) fail("bad escape");
        c = next();
      }
      v += c;
    }
    return utf8::encode(v);
  }

  void expect(char32_t c) {
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + utf8::encode(std::u32string(1, c)) + "'");
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && utf8::is_space(peek())) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char32_t peek() const { return s_[pos_]; }
  char32_t next() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& what) {
    throw Error(Errc::kQuerySyntax, "column " + std::to_string(col + 1) + ": " + what);
  }

  std::u32string s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) {
  return glob_at(utf8::decode(pattern), utf8::decode(text));
}

bool TokenPattern::matches(const CorpusToken& t) const {
  if (word && utf8::casefold(t.word) != *word) return false;
  if (lemma && utf8::casefold(t.lemma) != *lemma) return false;
  if (pos && !glob_match(*pos, t.pos)) return false;
  return true;
}

void Query::validate() const {
  if (patterns.empty()) throw Error(Errc::kQueryEmpty, "query has no token pattern");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    if (!p.word && !p.lemma && !p.pos) {
      throw Error(Errc::kQueryEmpty, "pattern " + std::to_string(i + 1) + " has no constraint");
    }
  }
  if (limit > kMaxLimit) {
    throw Error(Errc::kQueryLimit,
                "limit " + std::to_string(limit) + " exceeds " + std::to_string(kMaxLimit));
  }
}

Query parse_query(std::string_view text) { return Parser(text).parse(); }

}  // namespace lsk::queryservice
