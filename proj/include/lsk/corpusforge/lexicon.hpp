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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lsk::corpusforge {

// Word list with optional pronunciations. Lookups are casefolded; a second
// index groups entries by their diacritic-stripped form.
class Lexicon {
 public:
  void add(std::string_view word, std::optional<std::vector<std::string>> pronunciation = {});
  bool contains(std::string_view word) const;
  // Entries that equal `word` once diacritics are stripped from both.
  const std::vector<std::string>& variants(std::string_view word) const;
  bool contains_stripped(std::string_view word) const { return !variants(word).empty(); }
  const std::vector<std::string>* pronunciation(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

  // One entry per line: `word` or `word<TAB>phone phone ...`; `#` lines are
  // comments.
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::string& path);

 private:
  std::unordered_map<std::string, std::optional<std::vector<std::string>>> entries_;
  std::unordered_map<std::string, std::vector<std::string>> stripped_;
};

}  // namespace lsk::corpusforge
