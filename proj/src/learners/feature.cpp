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

#include "lsk/learners/feature.hpp"

#include <algorithm>

namespace lsk::learners {

const std::string* FeatureVector::find(std::string_view slot) const {
  for (const auto& [name, value] : slots) {
    if (name == slot) return &value;
  }
  return nullptr;
}

std::vector<std::string> FeatureVector::tokens() const {
  std::vector<std::string> out;
  out.reserve(slots.size());
  for (const auto& [name, value] : slots) out.push_back(name + "=" + value);
  return out;
}

FeatureBag make_bag(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

bool bag_contains(const FeatureBag& bag, std::string_view token) {
  return std::binary_search(bag.begin(), bag.end(), token,
                            [](std::string_view a, std::string_view b) { return a < b; });
}

bool valid_feature_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c == '/' || c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

}  // namespace lsk::learners
