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

#include "lsk/learners/linear_model.hpp"

#include <algorithm>
#include <numeric>

#include "lsk/common/error.hpp"
#include "lsk/common/rng.hpp"

namespace lsk::learners {

namespace {

std::size_t argmax(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

}  // namespace

LinearModel LinearModel::train(std::span<const LinearExample> data, const LinearParams& params) {
  if (data.empty()) throw Error(Errc::kEmptyTrainset, "linear model needs at least one example");
  LinearModel m;
  m.epochs_ = params.epochs;
  m.seed_ = params.seed;

  std::unordered_map<std::string, std::uint32_t> class_index;
  std::vector<std::vector<std::uint32_t>> rows(data.size());
  std::vector<std::uint32_t> gold(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto [cit, cnew] = class_index.emplace(data[i].label, static_cast<std::uint32_t>(m.classes_.size()));
    if (cnew) m.classes_.push_back(data[i].label);
    gold[i] = cit->second;
    for (const auto& f : data[i].features) {
      auto [fit, fnew] = m.feature_index_.emplace(f, static_cast<std::uint32_t>(m.features_.size()));
      if (fnew) m.features_.push_back(f);
      rows[i].push_back(fit->second);
    }
    std::sort(rows[i].begin(), rows[i].end());
    rows[i].erase(std::unique(rows[i].begin(), rows[i].end()), rows[i].end());
  }

  const std::size_t nc = m.classes_.size();
  std::vector<double> w(m.features_.size() * nc, 0.0);
  std::vector<double> u(w.size(), 0.0);
  double c = 1.0;
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(params.seed);
  std::vector<double> scores(nc);
  for (std::uint32_t epoch = 0; epoch < params.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (auto i : order) {
      std::fill(scores.begin(), scores.end(), 0.0);
      for (auto f : rows[i]) {
        for (std::size_t k = 0; k < nc; ++k) scores[k] += w[f * nc + k];
      }
      // The strongest rival; a tie with the gold class counts as an error so
      // training only settles on weights that separate strictly.
      std::size_t guess = gold[i] == 0 ? std::min<std::size_t>(1, nc - 1) : 0;
      for (std::size_t k = 0; k < nc; ++k) {
        if (k != gold[i] && scores[k] > scores[guess]) guess = k;
      }
      if (guess != gold[i] && scores[guess] >= scores[gold[i]]) {
        for (auto f : rows[i]) {
          w[f * nc + gold[i]] += 1.0;
          u[f * nc + gold[i]] += c;
          w[f * nc + guess] -= 1.0;
          u[f * nc + guess] -= c;
        }
      }
      c += 1.0;
    }
  }
  m.weights_.resize(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) m.weights_[j] = w[j] - u[j] / c;
  return m;
}

std::vector<std::uint32_t> LinearModel::feature_ids(std::span<const std::string> features) const {
  std::vector<std::uint32_t> ids;
  ids.reserve(features.size());
  for (const auto& f : features) {
    auto it = feature_index_.find(f);
    if (it != feature_index_.end()) ids.push_back(it->second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<double> LinearModel::scores(std::span<const std::string> features) const {
  const std::size_t nc = classes_.size();
  std::vector<double> out(nc, 0.0);
  for (auto f : feature_ids(features)) {
    for (std::size_t k = 0; k < nc; ++k) out[k] += weights_[f * nc + k];
  }
  return out;
}

const std::string& LinearModel::predict(std::span<const std::string> features) const {
  return classes_[argmax(scores(features))];
}

double LinearModel::weight(const std::string& feature, const std::string& cls) const {
  auto it = feature_index_.find(feature);
  auto ct = std::find(classes_.begin(), classes_.end(), cls);
  if (it == feature_index_.end() || ct == classes_.end()) return 0.0;
  return weights_[it->second * classes_.size() + static_cast<std::size_t>(ct - classes_.begin())];
}

void LinearModel::write(ByteWriter& w) const {
  w.u32(epochs_);
  w.u64(seed_);
  w.u32(static_cast<std::uint32_t>(classes_.size()));
  for (const auto& c : classes_) w.str(c);
  w.u32(static_cast<std::uint32_t>(features_.size()));
  for (const auto& f : features_) w.str(f);
  for (double x : weights_) w.f64(x);
}

LinearModel LinearModel::read(ByteReader& r) {
  LinearModel m;
  m.epochs_ = r.u32();
  m.seed_ = r.u64();
  const auto nc = r.count(4);
  if (nc == 0) r.fail("model without classes");
  for (std::uint32_t k = 0; k < nc; ++k) m.classes_.push_back(r.str());
  const auto nf = r.count(4);
  for (std::uint32_t j = 0; j < nf; ++j) {
    auto f = r.str();
    if (!m.feature_index_.emplace(f, j).second) r.fail("duplicate feature");
    m.features_.push_back(std::move(f));
  }
  m.weights_.resize(static_cast<std::size_t>(nf) * nc);
  for (auto& x : m.weights_) x = r.f64();
  return m;
}

Bytes LinearModel::to_bytes() const {
  ByteWriter w;
  write(w);
  return write_container('L', {std::move(w).take()});
}

LinearModel LinearModel::from_bytes(std::span<const std::uint8_t> file) {
  auto c = read_container(file, 'L');
  if (c.sections.size() != 1) throw Error(Errc::kModelFormat, "expected 1 section at byte offset 6");
  auto r = c.sections[0].reader();
  auto m = read(r);
  r.expect_end();
  return m;
}

}  // namespace lsk::learners
