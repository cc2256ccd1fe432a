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

#include <string>
#include <string_view>
#include <vector>

namespace lsk::utf8 {

// Invalid byte sequences decode to U+FFFD; decoding never throws.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);
std::size_t length(std::string_view text);

// Character classes tuned for Latin-script text with Romanian diacritics
// (including the legacy cedilla forms of s/t).
bool is_letter(char32_t cp) noexcept;
bool is_upper(char32_t cp) noexcept;
bool is_lower(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;
bool is_control(char32_t cp) noexcept;
bool is_punct(char32_t cp) noexcept;
bool is_vowel(char32_t cp) noexcept;

char32_t to_lower(char32_t cp) noexcept;
char32_t to_upper(char32_t cp) noexcept;
// Base letter without diacritic: ă/â -> a, î -> i, ș/ş -> s, ț/ţ -> t, ...
char32_t strip_diacritic(char32_t cp) noexcept;
bool has_diacritic(char32_t cp) noexcept;

std::string casefold(std::string_view text);
std::string strip_diacritics(std::string_view text);
std::string to_upper(std::string_view text);

// Token made only of punctuation code points (no letters, digits, spaces).
bool is_punctuation_token(std::string_view token);
bool has_vowel(std::string_view token);

std::vector<std::string> split(std::string_view text, char sep);
std::vector<std::string> split_whitespace(std::string_view text);
std::string_view trim(std::string_view text);

}  // namespace lsk::utf8
