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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/learners/feature.hpp"

namespace lsk::learners {

// One training observation. When `voiced` is set (it must then be set on
// every example), the target only counts for voiced examples and leaves carry
// the voiced fraction; this is how the log-F0 stream is trained.
struct RegExample {
  FeatureBag bag;
  std::vector<double> target;
  std::optional<bool> voiced;
};

struct RegTreeParams {
  std::size_t min_occupancy = 10;  // examples on each side of a split
  double min_gain = 1e-6;          // required reduction of summed squared error
  std::size_t max_depth = 64;
};

struct RegLeaf {
  std::vector<double> mean;
  std::vector<double> variance;  // diagonal, population variance
  std::optional<double> voiced_fraction;
  std::uint32_t count = 0;
  bool operator==(const RegLeaf&) const = default;
};

// Binary regression tree over membership questions "bag contains token".
// Each split is the question with the largest reduction of summed squared
// error; ties go to the lexicographically smallest token.
class RegTree {
 public:
  static RegTree train(std::span<const RegExample> data, const RegTreeParams& params = {});
  // Single-leaf tree, used to hand-build toy voices.
  static RegTree constant(RegLeaf leaf);

  const RegLeaf& predict(const FeatureBag& bag) const;

  std::size_t dimension() const { return dimension_; }
  bool has_voicing() const { return has_voicing_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t depth() const;
  // Question at the root, or empty for a single leaf.
  std::string root_question() const;
  // Summed squared error of the training data around the leaf means.
  double training_loss() const { return loss_; }
  const std::vector<RegLeaf>& leaves() const { return leaves_; }

  Bytes to_bytes() const;
  static RegTree from_bytes(std::span<const std::uint8_t> file);
  void write(ByteWriter& w) const;
  static RegTree read(ByteReader& r);

 private:
  struct Node {
    std::string question;        // empty for leaves
    std::uint32_t yes = 0;       // child indices into nodes_
    std::uint32_t no = 0;
    std::uint32_t leaf = 0;      // index into leaves_ when a leaf
    double gain = 0.0;
  };

  std::uint32_t build(std::span<const RegExample> data, const std::vector<std::size_t>& rows,
                      std::size_t depth, const RegTreeParams& params);

  std::size_t dimension_ = 0;
  bool has_voicing_ = false;
  double loss_ = 0.0;
  std::vector<Node> nodes_;
  std::vector<RegLeaf> leaves_;
};

namespace detail {
// Summed squared error of `rows` (targets of voiced rows, plus the voicing
// indicator when present).
double sum_squared_error(std::span<const RegExample> data, std::span<const std::size_t> rows,
                         bool with_voicing);
}  // namespace detail

}  // namespace lsk::learners
