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

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lsk/common/binary_io.hpp"

namespace lsk::learners {

struct LinearExample {
  std::vector<std::string> features;  // duplicates are counted once
  std::string label;
};

struct LinearParams {
  std::uint32_t epochs = 5;
  std::uint64_t seed = 1;
};

// Multiclass averaged perceptron. Features and classes get dense indices in
// first-seen order; the stored weights are the averaged ones. Training
// updates whenever a rival class scores at least as high as the gold class.
class LinearModel {
 public:
  static LinearModel train(std::span<const LinearExample> data, const LinearParams& params = {});

  // Highest-scoring class; ties go to the class seen first in training.
  const std::string& predict(std::span<const std::string> features) const;
  // Per-class scores in class-inventory order.
  std::vector<double> scores(std::span<const std::string> features) const;
  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t feature_count() const { return features_.size(); }
  std::uint32_t epochs() const { return epochs_; }
  std::uint64_t seed() const { return seed_; }
  // Averaged weight, 0 for unknown feature or class.
  double weight(const std::string& feature, const std::string& cls) const;

  Bytes to_bytes() const;
  static LinearModel from_bytes(std::span<const std::uint8_t> file);
  void write(ByteWriter& w) const;
  static LinearModel read(ByteReader& r);

 private:
  std::vector<std::uint32_t> feature_ids(std::span<const std::string> features) const;

  std::vector<std::string> classes_;
  std::vector<std::string> features_;
  std::unordered_map<std::string, std::uint32_t> feature_index_;
  std::vector<double> weights_;  // features_.size() x classes_.size(), row-major
  std::uint32_t epochs_ = 0;
  std::uint64_t seed_ = 0;
};

}  // namespace lsk::learners
