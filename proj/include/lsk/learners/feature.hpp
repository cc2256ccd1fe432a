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

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsk::learners {

inline constexpr std::string_view kPad = "__PAD__";

// Positional feature vector: ordered (slot, value) pairs with unique slots.
struct FeatureVector {
  std::vector<std::pair<std::string, std::string>> slots;

  void add(std::string slot, std::string value) {
    slots.emplace_back(std::move(slot), std::move(value));
  }
  const std::string* find(std::string_view slot) const;
  // "slot=value" tokens for bag-of-features learners.
  std::vector<std::string> tokens() const;
  bool operator==(const FeatureVector&) const = default;
};

// Bag of feature tokens; kept sorted and unique by make_bag().
using FeatureBag = std::vector<std::string>;

FeatureBag make_bag(std::vector<std::string> tokens);
bool bag_contains(const FeatureBag& bag, std::string_view token);

// Feature tokens may not contain whitespace or '/', the label delimiter.
bool valid_feature_token(std::string_view token);

}  // namespace lsk::learners
