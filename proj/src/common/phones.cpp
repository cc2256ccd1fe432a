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

#include "lsk/common/phones.hpp"

#include <algorithm>
#include <map>

namespace lsk::phones {

const std::vector<std::string>& default_inventory() {
  static const std::vector<std::string> kInventory = {
      "@", "a", "a@", "b", "ch", "d", "dz", "e", "e@", "f", "g", "h", "i", "ij", "j", "k", "l",
      "m", "n", "o", "o@", "p", "pau", "r", "s", "sh", "sp", "t", "ts", "u", "v", "w", "z", "zh"};
  return kInventory;
}

bool in_default_inventory(std::string_view symbol) {
  const auto& inv = default_inventory();
  return std::find(inv.begin(), inv.end(), symbol) != inv.end();
}

bool is_silence(std::string_view symbol) { return symbol == "pau" || symbol == "sp"; }

Articulation articulation(std::string_view symbol) {
  static const std::map<std::string_view, Articulation> kTable = {
      {"@", {"vow", "central", "mid", "voiced"}},
      {"a", {"vow", "central", "open", "voiced"}},
      {"a@", {"vow", "central", "close", "voiced"}},
      {"e", {"vow", "front", "mid", "voiced"}},
      {"e@", {"vow", "front", "open", "voiced"}},
      {"i", {"vow", "front", "close", "voiced"}},
      {"ij", {"vow", "front", "glide", "voiced"}},
      {"j", {"vow", "front", "glide", "voiced"}},
      {"o", {"vow", "back", "mid", "voiced"}},
      {"o@", {"vow", "back", "open", "voiced"}},
      {"u", {"vow", "back", "close", "voiced"}},
      {"w", {"vow", "back", "glide", "voiced"}},
      {"b", {"cons", "bilabial", "plosive", "voiced"}},
      {"p", {"cons", "bilabial", "plosive", "unvoiced"}},
      {"m", {"cons", "bilabial", "nasal", "voiced"}},
      {"f", {"cons", "labiodental", "fricative", "unvoiced"}},
      {"v", {"cons", "labiodental", "fricative", "voiced"}},
      {"t", {"cons", "alveolar", "plosive", "unvoiced"}},
      {"d", {"cons", "alveolar", "plosive", "voiced"}},
      {"n", {"cons", "alveolar", "nasal", "voiced"}},
      {"s", {"cons", "alveolar", "fricative", "unvoiced"}},
      {"z", {"cons", "alveolar", "fricative", "voiced"}},
      {"ts", {"cons", "alveolar", "affricate", "unvoiced"}},
      {"r", {"cons", "alveolar", "trill", "voiced"}},
      {"l", {"cons", "alveolar", "lateral", "voiced"}},
      {"ch", {"cons", "postalveolar", "affricate", "unvoiced"}},
      {"dz", {"cons", "postalveolar", "affricate", "voiced"}},
      {"sh", {"cons", "postalveolar", "fricative", "unvoiced"}},
      {"zh", {"cons", "postalveolar", "fricative", "voiced"}},
      {"k", {"cons", "velar", "plosive", "unvoiced"}},
      {"g", {"cons", "velar", "plosive", "voiced"}},
      {"h", {"cons", "glottal", "fricative", "unvoiced"}},
      {"pau", {"sil", "sil", "sil", "unvoiced"}},
      {"sp", {"sil", "sil", "sil", "unvoiced"}},
  };
  auto it = kTable.find(symbol);
  if (it == kTable.end()) return {"x", "x", "x", "x"};
  return it->second;
}

}  // namespace lsk::phones
