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

namespace lsk::phones {

// The 34-symbol default inventory, in table order.
const std::vector<std::string>& default_inventory();
bool in_default_inventory(std::string_view symbol);
bool is_silence(std::string_view symbol);  // pau, sp

// Articulatory description used by the TTS front end. Unknown symbols and
// the boundary sentinel map to "x" in every field.
struct Articulation {
  std::string_view cls;      // vow, cons, sil
  std::string_view place;    // front/central/back for vowels, place of articulation otherwise
  std::string_view manner;   // open/mid/close/glide, plosive/fricative/...
  std::string_view voicing;  // voiced, unvoiced
};
Articulation articulation(std::string_view symbol);

}  // namespace lsk::phones
