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
#include <utility>
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/learners/feature.hpp"

namespace lsk::learners {

struct ClassExample {
  FeatureVector x;
  std::string label;
};

struct ClassTreeParams {
  std::size_t min_leaf = 1;     // every child of a split holds at least this many examples
  std::size_t max_depth = 64;   // edges from the root
};

struct ClassPrediction {
  std::string label;
  // Normalized class distribution, in class-inventory (lexicographic) order.
  std::vector<std::pair<std::string, double>> distribution;
  std::size_t visited = 0;  // internal nodes tested on the way down
};

// Multiway decision tree over categorical slots, split by information gain
// ratio. Slots and classes are kept in lexicographic order, so ties in gain
// ratio go to the lexicographically smallest slot and ties in class counts go
// to the smallest class label.
class ClassTree {
 public:
  static ClassTree train(std::span<const ClassExample> data, const ClassTreeParams& params = {});

  ClassPrediction predict(const FeatureVector& x) const;

  std::size_t depth() const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;
  const std::vector<std::string>& slots() const { return slots_; }
  const std::vector<std::string>& classes() const { return classes_; }
  // Slot tested at the root, or empty for a single-leaf tree.
  std::string root_slot() const;
  // Checks the structural invariants (slot used once per path, leaf counts
  // sum to the node's training count); returns false on violation.
  bool check_invariants() const;

  Bytes to_bytes() const;
  static ClassTree from_bytes(std::span<const std::uint8_t> file);
  void write(ByteWriter& w) const;
  static ClassTree read(ByteReader& r);

 private:
  struct Node {
    int slot = -1;          // -1 marks a leaf
    std::uint32_t majority = 0;
    std::vector<std::uint32_t> counts;  // per class
    std::vector<std::pair<std::string, std::uint32_t>> children;  // sorted by value
  };

  std::size_t build(std::span<const ClassExample> data, std::vector<std::size_t>& rows,
                    std::vector<bool>& used, std::size_t depth, const ClassTreeParams& params,
                    const std::vector<std::vector<std::uint32_t>>& slot_of_row_value,
                    const std::vector<std::vector<std::string>>& slot_values,
                    const std::vector<std::uint32_t>& label_of_row);
  std::size_t depth_from(std::size_t node) const;
  bool check_from(std::size_t node, std::vector<bool>& used) const;

  std::vector<std::string> slots_;
  std::vector<std::string> classes_;
  std::vector<Node> nodes_;
};

namespace detail {

// Shannon entropy (bits) of a count vector.
double entropy(std::span<const std::uint32_t> counts);
// Gain ratio of splitting `labels` by `values` (parallel arrays); 0 when the
// split information is 0.
double gain_ratio(std::span<const std::uint32_t> values, std::span<const std::uint32_t> labels);

}  // namespace detail

}  // namespace lsk::learners
