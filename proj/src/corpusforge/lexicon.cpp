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

#include "lsk/corpusforge/lexicon.hpp"

#include <algorithm>

#include "lsk/common/binary_io.hpp"
#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::corpusforge {

void Lexicon::add(std::string_view word, std::optional<std::vector<std::string>> pronunciation) {
  auto key = utf8::casefold(word);
  auto [it, fresh] = entries_.emplace(key, std::move(pronunciation));
  if (!fresh) {
    if (pronunciation && !it->second) it->second = std::move(pronunciation);
    return;
  }
  auto& v = stripped_[utf8::strip_diacritics(key)];
  v.insert(std::upper_bound(v.begin(), v.end(), key), key);
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.count(utf8::casefold(word)) > 0;
}

const std::vector<std::string>& Lexicon::variants(std::string_view word) const {
  static const std::vector<std::string> kNone;
  auto it = stripped_.find(utf8::strip_diacritics(utf8::casefold(word)));
  return it == stripped_.end() ? kNone : it->second;
}

const std::vector<std::string>* Lexicon::pronunciation(std::string_view word) const {
  auto it = entries_.find(utf8::casefold(word));
  if (it == entries_.end() || !it->second) return nullptr;
  return &*it->second;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  for (const auto& raw : utf8::split(text, '\n')) {
    const auto line = utf8::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      lex.add(line);
    } else {
      lex.add(utf8::trim(line.substr(0, tab)), utf8::split_whitespace(line.substr(tab + 1)));
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path) { return parse(read_text_file(path)); }

}  // namespace lsk::corpusforge
