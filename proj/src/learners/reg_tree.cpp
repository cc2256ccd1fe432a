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

#include "lsk/learners/reg_tree.hpp"

#include <algorithm>
#include <cmath>

#include "lsk/common/error.hpp"

namespace lsk::learners {

namespace detail {

namespace {

bool counts_for_target(const RegExample& e, bool with_voicing) {
  return !with_voicing || e.voiced.value_or(false);
}

}  // namespace

double sum_squared_error(std::span<const RegExample> data, std::span<const std::size_t> rows,
                         bool with_voicing) {
  if (rows.empty()) return 0.0;
  const auto dim = data[rows.front()].target.size();
  std::vector<double> mean(dim, 0.0);
  std::size_t n = 0;
  double voiced = 0.0;
  for (auto r : rows) {
    const auto& e = data[r];
    if (with_voicing && *e.voiced) voiced += 1.0;
    if (!counts_for_target(e, with_voicing)) continue;
    for (std::size_t d = 0; d < dim; ++d) mean[d] += e.target[d];
    ++n;
  }
  double sse = 0.0;
  if (n > 0) {
    for (auto& m : mean) m /= static_cast<double>(n);
    for (auto r : rows) {
      const auto& e = data[r];
      if (!counts_for_target(e, with_voicing)) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = e.target[d] - mean[d];
        sse += diff * diff;
      }
    }
  }
  if (with_voicing) {
    const double vbar = voiced / static_cast<double>(rows.size());
    // Sum of squared deviations of a 0/1 indicator.
    sse += voiced * (1.0 - vbar) * (1.0 - vbar) +
           (static_cast<double>(rows.size()) - voiced) * vbar * vbar;
  }
  return sse;
}

}  // namespace detail

namespace {

constexpr double kTieEpsilon = 1e-12;

RegLeaf make_leaf(std::span<const RegExample> data, const std::vector<std::size_t>& rows,
                  std::size_t dim, bool with_voicing) {
  RegLeaf leaf;
  leaf.count = static_cast<std::uint32_t>(rows.size());
  leaf.mean.assign(dim, 0.0);
  leaf.variance.assign(dim, 0.0);
  std::size_t n = 0;
  std::size_t voiced = 0;
  for (auto r : rows) {
    const auto& e = data[r];
    if (with_voicing && *e.voiced) ++voiced;
    if (with_voicing && !*e.voiced) continue;
    for (std::size_t d = 0; d < dim; ++d) leaf.mean[d] += e.target[d];
    ++n;
  }
  if (n > 0) {
    for (auto& m : leaf.mean) m /= static_cast<double>(n);
    for (auto r : rows) {
      const auto& e = data[r];
      if (with_voicing && !*e.voiced) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = e.target[d] - leaf.mean[d];
        leaf.variance[d] += diff * diff;
      }
    }
    for (auto& v : leaf.variance) v /= static_cast<double>(n);
  }
  if (with_voicing) {
    leaf.voiced_fraction = rows.empty() ? 0.0 : static_cast<double>(voiced) / rows.size();
  }
  return leaf;
}

}  // namespace

RegTree RegTree::train(std::span<const RegExample> data, const RegTreeParams& params) {
  if (data.empty()) throw Error(Errc::kEmptyTrainset, "regression tree needs at least one example");
  RegTree tree;
  tree.dimension_ = data.front().target.size();
  tree.has_voicing_ = data.front().voiced.has_value();
  std::vector<RegExample> sorted;
  sorted.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& e = data[i];
    if (e.target.size() != tree.dimension_) {
      throw Error(Errc::kDimMismatch, "example " + std::to_string(i + 1) + " has dimension " +
                                          std::to_string(e.target.size()) + ", expected " +
                                          std::to_string(tree.dimension_));
    }
    if (e.voiced.has_value() != tree.has_voicing_) {
      throw Error(Errc::kDimMismatch,
                  "example " + std::to_string(i + 1) + " disagrees on the voicing flag");
    }
    for (const auto& tok : e.bag) {
      if (!valid_feature_token(tok)) {
        throw Error(Errc::kInvalidArgument, "feature token '" + tok + "' contains space or '/'");
      }
    }
    sorted.push_back(RegExample{make_bag(e.bag), e.target, e.voiced});
  }
  std::vector<std::size_t> rows(sorted.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  tree.build(sorted, rows, 0, params);
  return tree;
}

std::uint32_t RegTree::build(std::span<const RegExample> data, const std::vector<std::size_t>& rows,
                             std::size_t depth, const RegTreeParams& params) {
  const auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  const double node_sse = detail::sum_squared_error(data, rows, has_voicing_);

  std::string best_question;
  double best_gain = -1.0;
  std::vector<std::size_t> best_yes, best_no;
  if (depth < params.max_depth && rows.size() >= 2 * params.min_occupancy && rows.size() >= 2) {
    std::vector<std::string> candidates;
    for (auto r : rows) candidates.insert(candidates.end(), data[r].bag.begin(), data[r].bag.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<std::size_t> yes, no;
    for (const auto& q : candidates) {
      yes.clear();
      no.clear();
      for (auto r : rows) (bag_contains(data[r].bag, q) ? yes : no).push_back(r);
      if (yes.size() < std::max<std::size_t>(params.min_occupancy, 1) ||
          no.size() < std::max<std::size_t>(params.min_occupancy, 1)) {
        continue;
      }
      const double gain = node_sse - detail::sum_squared_error(data, yes, has_voicing_) -
                          detail::sum_squared_error(data, no, has_voicing_);
      if (gain > best_gain + kTieEpsilon) {
        best_gain = gain;
        best_question = q;
        best_yes = yes;
        best_no = no;
      }
    }
  }

  if (best_question.empty() || best_gain < params.min_gain) {
    nodes_[index].leaf = static_cast<std::uint32_t>(leaves_.size());
    leaves_.push_back(make_leaf(data, rows, dimension_, has_voicing_));
    loss_ += node_sse;
    return index;
  }
  nodes_[index].question = best_question;
  nodes_[index].gain = best_gain;
  const auto yes_child = build(data, best_yes, depth + 1, params);
  const auto no_child = build(data, best_no, depth + 1, params);
  nodes_[index].yes = yes_child;
  nodes_[index].no = no_child;
  return index;
}

RegTree RegTree::constant(RegLeaf leaf) {
  RegTree tree;
  tree.dimension_ = leaf.mean.size();
  if (leaf.variance.size() != tree.dimension_) {
    throw Error(Errc::kDimMismatch, "leaf mean/variance dimensions differ");
  }
  tree.has_voicing_ = leaf.voiced_fraction.has_value();
  tree.nodes_.emplace_back();
  tree.leaves_.push_back(std::move(leaf));
  return tree;
}

const RegLeaf& RegTree::predict(const FeatureBag& bag) const {
  std::uint32_t at = 0;
  while (!nodes_[at].question.empty()) {
    at = bag_contains(bag, nodes_[at].question) ? nodes_[at].yes : nodes_[at].no;
  }
  return leaves_[nodes_[at].leaf];
}

std::size_t RegTree::depth() const {
  std::vector<std::size_t> d(nodes_.size(), 0);
  std::size_t best = 0;
  // Children always follow their parent in preorder.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].question.empty()) continue;
    d[nodes_[i].yes] = d[i] + 1;
    d[nodes_[i].no] = d[i] + 1;
    best = std::max(best, d[i] + 1);
  }
  return best;
}

std::string RegTree::root_question() const { return nodes_.empty() ? "" : nodes_[0].question; }

void RegTree::write(ByteWriter& w) const {
  w.u32(static_cast<std::uint32_t>(dimension_));
  w.u8(has_voicing_ ? 1 : 0);
  w.f64(loss_);
  w.u32(static_cast<std::uint32_t>(nodes_.size()));
  for (const auto& n : nodes_) {
    const bool leaf = n.question.empty();
    w.u8(leaf ? 1 : 0);
    if (leaf) {
      w.u32(n.leaf);
    } else {
      w.str(n.question);
      w.u32(n.yes);
      w.u32(n.no);
      w.f64(n.gain);
    }
  }
  w.u32(static_cast<std::uint32_t>(leaves_.size()));
  for (const auto& l : leaves_) {
    w.u32(l.count);
    for (double m : l.mean) w.f64(m);
    for (double v : l.variance) w.f64(v);
    w.u8(l.voiced_fraction ? 1 : 0);
    w.f64(l.voiced_fraction.value_or(0.0));
  }
}

RegTree RegTree::read(ByteReader& r) {
  RegTree t;
  t.dimension_ = r.u32();
  const auto voicing = r.u8();
  if (voicing > 1) r.fail("bad voicing flag");
  t.has_voicing_ = voicing == 1;
  t.loss_ = r.f64();
  const auto n_nodes = r.count(5);
  if (n_nodes == 0) r.fail("tree without nodes");
  t.nodes_.resize(n_nodes);
  std::uint32_t leaf_refs = 0;
  for (std::uint32_t i = 0; i < n_nodes; ++i) {
    auto& n = t.nodes_[i];
    const auto kind = r.u8();
    if (kind == 1) {
      n.leaf = r.u32();
      ++leaf_refs;
    } else if (kind == 0) {
      n.question = r.str();
      if (n.question.empty()) r.fail("empty question");
      n.yes = r.u32();
      n.no = r.u32();
      if (n.yes <= i || n.no <= i || n.yes >= n_nodes || n.no >= n_nodes) {
        r.fail("child index out of range");
      }
      n.gain = r.f64();
    } else {
      r.fail("bad node kind");
    }
  }
  const auto n_leaves = r.count(13);
  if (n_leaves != leaf_refs) r.fail("leaf count mismatch");
  for (std::uint32_t i = 0; i < n_leaves; ++i) {
    RegLeaf l;
    l.count = r.u32();
    l.mean.resize(t.dimension_);
    l.variance.resize(t.dimension_);
    for (auto& m : l.mean) m = r.f64();
    for (auto& v : l.variance) v = r.f64();
    const auto has_vf = r.u8();
    const double vf = r.f64();
    if (has_vf > 1) r.fail("bad voiced-fraction flag");
    if (has_vf) l.voiced_fraction = vf;
    t.leaves_.push_back(std::move(l));
  }
  for (const auto& n : t.nodes_) {
    if (n.question.empty() && n.leaf >= n_leaves) r.fail("leaf index out of range");
  }
  return t;
}

Bytes RegTree::to_bytes() const {
  ByteWriter w;
  write(w);
  return write_container('R', {std::move(w).take()});
}

RegTree RegTree::from_bytes(std::span<const std::uint8_t> file) {
  auto c = read_container(file, 'R');
  if (c.sections.size() != 1) throw Error(Errc::kModelFormat, "expected 1 section at byte offset 6");
  auto r = c.sections[0].reader();
  auto t = read(r);
  r.expect_end();
  return t;
}

}  // namespace lsk::learners
