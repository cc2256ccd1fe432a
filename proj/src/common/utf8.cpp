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

#include "lsk/common/utf8.hpp"

namespace lsk::utf8 {

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
    }
    if (len > 1) {
      if (i + len > n) {
        len = 1;
      } else {
        char32_t acc = b0 & (0xFF >> (len + 1));
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
          const auto b = static_cast<unsigned char>(text[i + k]);
          if ((b & 0xC0) != 0x80) {
            ok = false;
            break;
          }
          acc = (acc << 6) | (b & 0x3F);
        }
        if (ok) {
          cp = acc;
        } else {
          len = 1;
        }
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append(out, cp);
  return out;
}

std::size_t length(std::string_view text) { return decode(text).size(); }

namespace {

// Latin Extended-A pairs upper/lower on even/odd code points, except in the
// two ranges where the parity flips.
bool ext_a_parity_flipped(char32_t cp) {
  return (cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E);
}

bool in_ext_a_cased(char32_t cp) {
  return cp >= 0x0100 && cp <= 0x017E && cp != 0x0130 && cp != 0x0131 &&
         cp != 0x0138 && cp != 0x0149 && cp != 0x0178;
}

}  // namespace

bool is_letter(char32_t cp) noexcept {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0x00C0 && cp <= 0x024F) return cp != 0x00D7 && cp != 0x00F7;
  if (cp >= 0x0370 && cp <= 0x03FF) return true;  // Greek
  if (cp >= 0x0400 && cp <= 0x04FF) return true;  // Cyrillic
  return false;
}

bool is_upper(char32_t cp) noexcept {
  if (cp >= U'A' && cp <= U'Z') return true;
  if (cp >= 0x00C0 && cp <= 0x00DE) return cp != 0x00D7;
  if (in_ext_a_cased(cp)) return ext_a_parity_flipped(cp) ? (cp % 2 == 1) : (cp % 2 == 0);
  if (cp == 0x0178) return true;
  if (cp >= 0x0218 && cp <= 0x021B) return cp % 2 == 0;
  if (cp >= 0x0410 && cp <= 0x042F) return true;
  if (cp >= 0x0391 && cp <= 0x03A9) return true;
  return false;
}

bool is_lower(char32_t cp) noexcept {
  return is_letter(cp) && !is_upper(cp) && to_upper(cp) != cp;
}

bool is_digit(char32_t cp) noexcept {
  return (cp >= U'0' && cp <= U'9') || cp == 0x00B2 || cp == 0x00B3 || cp == 0x00B9 ||
         (cp >= 0x2070 && cp <= 0x2079) || (cp >= 0x2080 && cp <= 0x2089) ||
         (cp >= 0x00BC && cp <= 0x00BE);
}

bool is_space(char32_t cp) noexcept {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == 0x00A0 || cp == 0x2007 || cp == 0x202F || cp == 0x3000 ||
         (cp >= 0x2000 && cp <= 0x200A);
}

bool is_control(char32_t cp) noexcept {
  if (cp < 0x20 && cp != U'\t') return true;
  if (cp >= 0x7F && cp <= 0x9F) return true;
  // Zero-width and bidi formatting characters, byte-order mark.
  if ((cp >= 0x200B && cp <= 0x200F) || (cp >= 0x202A && cp <= 0x202E) || cp == 0xFEFF) {
    return true;
  }
  return cp == 0xFFFD;
}

bool is_punct(char32_t cp) noexcept {
  return !is_letter(cp) && !is_digit(cp) && !is_space(cp) && !is_control(cp);
}

bool is_vowel(char32_t cp) noexcept {
  switch (strip_diacritic(to_lower(cp))) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t cp) noexcept {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 32;
  if (in_ext_a_cased(cp) && is_upper(cp)) return cp + 1;
  if (cp == 0x0178) return 0x00FF;
  if (cp == 0x0218 || cp == 0x021A) return cp + 1;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 32;
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 32;
  return cp;
}

char32_t to_upper(char32_t cp) noexcept {
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  if (cp >= 0x00E0 && cp <= 0x00FE && cp != 0x00F7) return cp - 32;
  if (cp == 0x00FF) return 0x0178;
  if (in_ext_a_cased(cp) && !is_upper(cp)) return cp - 1;
  if (cp == 0x0219 || cp == 0x021B) return cp - 1;
  if (cp >= 0x0430 && cp <= 0x044F) return cp - 32;
  if (cp >= 0x03B1 && cp <= 0x03C9 && cp != 0x03C2) return cp - 32;
  return cp;
}

char32_t strip_diacritic(char32_t cp) noexcept {
  switch (cp) {
    case 0x0103: case 0x00E2: case 0x00E0: case 0x00E1: case 0x00E4: case 0x00E3: case 0x00E5:
      return U'a';
    case 0x0102: case 0x00C2: case 0x00C0: case 0x00C1: case 0x00C4: case 0x00C3: case 0x00C5:
      return U'A';
    case 0x00EE: case 0x00EC: case 0x00ED: case 0x00EF:
      return U'i';
    case 0x00CE: case 0x00CC: case 0x00CD: case 0x00CF:
      return U'I';
    case 0x0219: case 0x015F: case 0x0161:
      return U's';
    case 0x0218: case 0x015E: case 0x0160:
      return U'S';
    case 0x021B: case 0x0163:
      return U't';
    case 0x021A: case 0x0162:
      return U'T';
    case 0x00E8: case 0x00E9: case 0x00EA: case 0x00EB:
      return U'e';
    case 0x00C8: case 0x00C9: case 0x00CA: case 0x00CB:
      return U'E';
    case 0x00F2: case 0x00F3: case 0x00F4: case 0x00F6: case 0x00F5:
      return U'o';
    case 0x00D2: case 0x00D3: case 0x00D4: case 0x00D6: case 0x00D5:
      return U'O';
    case 0x00F9: case 0x00FA: case 0x00FB: case 0x00FC:
      return U'u';
    case 0x00D9: case 0x00DA: case 0x00DB: case 0x00DC:
      return U'U';
    case 0x00E7:
      return U'c';
    case 0x00C7:
      return U'C';
    case 0x00F1:
      return U'n';
    case 0x00D1:
      return U'N';
    default:
      return cp;
  }
}

bool has_diacritic(char32_t cp) noexcept { return strip_diacritic(cp) != cp; }

std::string casefold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : decode(text)) {
    // Legacy cedilla forms fold onto the comma-below letters.
    char32_t lower = to_lower(cp);
    if (lower == 0x015F) lower = 0x0219;
    if (lower == 0x0163) lower = 0x021B;
    append(out, lower);
  }
  return out;
}

std::string strip_diacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : decode(text)) append(out, strip_diacritic(cp));
  return out;
}

std::string to_upper(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : decode(text)) append(out, to_upper(cp));
  return out;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t cp : decode(token)) {
    if (!is_punct(cp)) return false;
  }
  return true;
}

bool has_vowel(std::string_view token) {
  for (char32_t cp : decode(token)) {
    if (is_vowel(cp)) return true;
  }
  return false;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\r' || text[j] == '\n')) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view text) {
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && is_ws(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_ws(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace lsk::utf8
