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

#include "lsk/learners/class_tree.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lsk/common/error.hpp"

namespace lsk::learners {

namespace detail {

double entropy(std::span<const std::uint32_t> counts) {
  double total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = c / total;
    h -= p * std::log2(p);
  }
  return h;
}

double gain_ratio(std::span<const std::uint32_t> values, std::span<const std::uint32_t> labels) {
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint32_t>> by_value;
  std::map<std::uint32_t, std::uint32_t> label_counts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    ++by_value[values[i]][labels[i]];
    ++label_counts[labels[i]];
  }
  auto to_vec = [](const std::map<std::uint32_t, std::uint32_t>& m) {
    std::vector<std::uint32_t> v;
    for (const auto& [k, c] : m) v.push_back(c);
    return v;
  };
  const double n = static_cast<double>(values.size());
  double conditional = 0.0;
  std::vector<std::uint32_t> value_sizes;
  for (const auto& [v, m] : by_value) {
    std::uint32_t size = 0;
    for (const auto& [k, c] : m) size += c;
    value_sizes.push_back(size);
    conditional += size / n * entropy(to_vec(m));
  }
  const double split_info = entropy(value_sizes);
  if (split_info <= 0.0) return 0.0;
  return (entropy(to_vec(label_counts)) - conditional) / split_info;
}

}  // namespace detail

namespace {
constexpr std::uint32_t kLeafSlot = 0xFFFFFFFFu;
constexpr double kTieEpsilon = 1e-12;
}  // namespace

ClassTree ClassTree::train(std::span<const ClassExample> data, const ClassTreeParams& params) {
  if (data.empty()) throw Error(Errc::kEmptyTrainset, "classification tree needs at least one example");
  ClassTree tree;

  for (const auto& [slot, value] : data.front().x.slots) tree.slots_.push_back(slot);
  std::sort(tree.slots_.begin(), tree.slots_.end());
  if (std::adjacent_find(tree.slots_.begin(), tree.slots_.end()) != tree.slots_.end()) {
    throw Error(Errc::kSlotMismatch, "duplicate slot name in example 1");
  }
  const auto n_slots = tree.slots_.size();

  // Value inventories per slot, then each row's value index per slot.
  std::vector<std::vector<std::string>> slot_values(n_slots);
  std::vector<std::vector<std::uint32_t>> row_values(data.size(), std::vector<std::uint32_t>(n_slots));
  std::vector<std::vector<const std::string*>> raw(data.size(), std::vector<const std::string*>(n_slots));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& x = data[i].x;
    if (x.slots.size() != n_slots) {
      throw Error(Errc::kSlotMismatch, "example " + std::to_string(i + 1) + " has " +
                                           std::to_string(x.slots.size()) + " slots, expected " +
                                           std::to_string(n_slots));
    }
    for (std::size_t s = 0; s < n_slots; ++s) {
      const auto* v = x.find(tree.slots_[s]);
      if (!v) {
        throw Error(Errc::kSlotMismatch,
                    "example " + std::to_string(i + 1) + " lacks slot " + tree.slots_[s]);
      }
      raw[i][s] = v;
      slot_values[s].push_back(*v);
    }
  }
  for (auto& vals : slot_values) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t s = 0; s < n_slots; ++s) {
      const auto& vals = slot_values[s];
      row_values[i][s] = static_cast<std::uint32_t>(
          std::lower_bound(vals.begin(), vals.end(), *raw[i][s]) - vals.begin());
    }
  }

  for (const auto& e : data) tree.classes_.push_back(e.label);
  std::sort(tree.classes_.begin(), tree.classes_.end());
  tree.classes_.erase(std::unique(tree.classes_.begin(), tree.classes_.end()), tree.classes_.end());
  std::vector<std::uint32_t> labels(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    labels[i] = static_cast<std::uint32_t>(
        std::lower_bound(tree.classes_.begin(), tree.classes_.end(), data[i].label) -
        tree.classes_.begin());
  }

  std::vector<std::size_t> rows(data.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<bool> used(n_slots, false);
  tree.build(data, rows, used, 0, params, row_values, slot_values, labels);
  return tree;
}

std::size_t ClassTree::build(std::span<const ClassExample> data, std::vector<std::size_t>& rows,
                             std::vector<bool>& used, std::size_t depth,
                             const ClassTreeParams& params,
                             const std::vector<std::vector<std::uint32_t>>& row_values,
                             const std::vector<std::vector<std::string>>& slot_values,
                             const std::vector<std::uint32_t>& labels) {
  const auto index = nodes_.size();
  nodes_.emplace_back();
  {
    Node& node = nodes_.back();
    node.counts.assign(classes_.size(), 0);
    for (auto r : rows) ++node.counts[labels[r]];
    node.majority = static_cast<std::uint32_t>(
        std::max_element(node.counts.begin(), node.counts.end()) - node.counts.begin());
  }
  const auto nonzero = std::count_if(nodes_[index].counts.begin(), nodes_[index].counts.end(),
                                     [](auto c) { return c > 0; });
  if (nonzero <= 1 || depth >= params.max_depth) return index;

  int best_slot = -1;
  double best_ratio = -1.0;
  std::vector<std::uint32_t> vals(rows.size()), labs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) labs[r] = labels[rows[r]];
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (used[s]) continue;
    std::map<std::uint32_t, std::size_t> sizes;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      vals[r] = row_values[rows[r]][s];
      ++sizes[vals[r]];
    }
    if (sizes.size() < 2) continue;
    bool admissible = true;
    for (const auto& [v, n] : sizes) admissible = admissible && n >= params.min_leaf;
    if (!admissible) continue;
    const double ratio = detail::gain_ratio(vals, labs);
    if (ratio > best_ratio + kTieEpsilon) {
      best_ratio = ratio;
      best_slot = static_cast<int>(s);
    }
  }
  if (best_slot < 0) return index;

  const auto s = static_cast<std::size_t>(best_slot);
  std::map<std::uint32_t, std::vector<std::size_t>> partition;
  for (auto r : rows) partition[row_values[r][s]].push_back(r);
  nodes_[index].slot = best_slot;
  used[s] = true;
  for (auto& [v, child_rows] : partition) {
    const auto child = build(data, child_rows, used, depth + 1, params, row_values, slot_values, labels);
    nodes_[index].children.emplace_back(slot_values[s][v], static_cast<std::uint32_t>(child));
  }
  used[s] = false;
  return index;
}

ClassPrediction ClassTree::predict(const FeatureVector& x) const {
  std::vector<const std::string*> values(slots_.size());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    values[s] = x.find(slots_[s]);
    if (!values[s]) throw Error(Errc::kSlotMissing, slots_[s]);
  }
  ClassPrediction out;
  std::size_t at = 0;
  while (nodes_[at].slot >= 0) {
    const auto& node = nodes_[at];
    const auto& value = *values[static_cast<std::size_t>(node.slot)];
    auto it = std::lower_bound(node.children.begin(), node.children.end(), value,
                               [](const auto& child, const std::string& v) { return child.first < v; });
    ++out.visited;
    if (it == node.children.end() || it->first != value) break;  // unseen value
    at = it->second;
  }
  const auto& node = nodes_[at];
  double total = 0;
  for (auto c : node.counts) total += c;
  out.label = classes_[node.majority];
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    out.distribution.emplace_back(classes_[c], total > 0 ? node.counts[c] / total : 0.0);
  }
  return out;
}

std::size_t ClassTree::depth_from(std::size_t node) const {
  std::size_t d = 0;
  for (const auto& [v, child] : nodes_[node].children) d = std::max(d, 1 + depth_from(child));
  return d;
}

std::size_t ClassTree::depth() const { return nodes_.empty() ? 0 : depth_from(0); }

std::size_t ClassTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.slot < 0; }));
}

std::string ClassTree::root_slot() const {
  if (nodes_.empty() || nodes_[0].slot < 0) return {};
  return slots_[static_cast<std::size_t>(nodes_[0].slot)];
}

bool ClassTree::check_from(std::size_t node, std::vector<bool>& used) const {
  const auto& n = nodes_[node];
  if (n.slot < 0) return n.children.empty();
  const auto s = static_cast<std::size_t>(n.slot);
  if (used[s]) return false;
  std::vector<std::uint32_t> sum(classes_.size(), 0);
  used[s] = true;
  bool ok = true;
  for (const auto& [v, child] : n.children) {
    ok = ok && check_from(child, used);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += nodes_[child].counts[c];
  }
  used[s] = false;
  return ok && sum == n.counts;
}

bool ClassTree::check_invariants() const {
  if (nodes_.empty()) return false;
  std::vector<bool> used(slots_.size(), false);
  return check_from(0, used);
}

void ClassTree::write(ByteWriter& w) const {
  w.u32(static_cast<std::uint32_t>(slots_.size()));
  for (const auto& s : slots_) w.str(s);
  w.u32(static_cast<std::uint32_t>(classes_.size()));
  for (const auto& c : classes_) w.str(c);
  w.u32(static_cast<std::uint32_t>(nodes_.size()));
  for (const auto& n : nodes_) {
    w.u32(n.slot < 0 ? kLeafSlot : static_cast<std::uint32_t>(n.slot));
    w.u32(n.majority);
    for (auto c : n.counts) w.u32(c);
    w.u32(static_cast<std::uint32_t>(n.children.size()));
    for (const auto& [value, child] : n.children) {
      w.str(value);
      w.u32(child);
    }
  }
}

ClassTree ClassTree::read(ByteReader& r) {
  ClassTree t;
  const auto n_slots = r.count(4);
  for (std::uint32_t i = 0; i < n_slots; ++i) t.slots_.push_back(r.str());
  const auto n_classes = r.count(4);
  if (n_classes == 0) r.fail("empty class inventory");
  for (std::uint32_t i = 0; i < n_classes; ++i) t.classes_.push_back(r.str());
  const auto n_nodes = r.count(12);
  if (n_nodes == 0) r.fail("tree without nodes");
  t.nodes_.resize(n_nodes);
  for (std::uint32_t i = 0; i < n_nodes; ++i) {
    auto& n = t.nodes_[i];
    const auto slot = r.u32();
    if (slot != kLeafSlot && slot >= n_slots) r.fail("slot index out of range");
    n.slot = slot == kLeafSlot ? -1 : static_cast<int>(slot);
    n.majority = r.u32();
    if (n.majority >= n_classes) r.fail("class index out of range");
    n.counts.resize(n_classes);
    for (auto& c : n.counts) c = r.u32();
    const auto n_children = r.count(8);
    for (std::uint32_t k = 0; k < n_children; ++k) {
      auto value = r.str();
      const auto child = r.u32();
      if (child >= n_nodes || child <= i) r.fail("child index out of range");
      n.children.emplace_back(std::move(value), child);
    }
    if ((n.slot < 0) != n.children.empty()) r.fail("leaf/split mismatch");
  }
  return t;
}

Bytes ClassTree::to_bytes() const {
  ByteWriter w;
  write(w);
  return write_container('C', {std::move(w).take()});
}

ClassTree ClassTree::from_bytes(std::span<const std::uint8_t> file) {
  auto c = read_container(file, 'C');
  if (c.sections.size() != 1) throw Error(Errc::kModelFormat, "expected 1 section at byte offset 6");
  auto r = c.sections[0].reader();
  auto t = read(r);
  r.expect_end();
  return t;
}

}  // namespace lsk::learners
