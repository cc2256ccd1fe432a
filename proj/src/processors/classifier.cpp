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

#include "lsk/processors/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace lsk::processors {

Classifier Classifier::train(Backend backend, std::span<const Instance> data,
                             const TrainOptions& options) {
  Classifier c;
  if (backend == Backend::kTree) {
    std::vector<learners::ClassExample> ex;
    ex.reserve(data.size());
    for (const auto& d : data) ex.push_back({d.x, d.label});
    c.model_ = learners::ClassTree::train(ex, options.tree);
  } else {
    std::vector<learners::LinearExample> ex;
    ex.reserve(data.size());
    for (const auto& d : data) ex.push_back({d.x.tokens(), d.label});
    c.model_ = learners::LinearModel::train(ex, options.linear);
  }
  return c;
}

Backend Classifier::backend() const {
  return std::holds_alternative<learners::ClassTree>(model_) ? Backend::kTree : Backend::kLinear;
}

std::string Classifier::predict(const learners::FeatureVector& x) const {
  if (const auto* t = std::get_if<learners::ClassTree>(&model_)) return t->predict(x).label;
  return std::get<learners::LinearModel>(model_).predict(x.tokens());
}

std::vector<std::string> Classifier::ranked(const learners::FeatureVector& x) const {
  std::vector<std::string> classes;
  std::vector<double> values;
  if (const auto* t = std::get_if<learners::ClassTree>(&model_)) {
    for (auto& [cls, p] : t->predict(x).distribution) {
      classes.push_back(cls);
      values.push_back(p);
    }
  } else {
    const auto& m = std::get<learners::LinearModel>(model_);
    classes = m.classes();
    values = m.scores(x.tokens());
  }
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::string> out;
  out.reserve(order.size());
  for (auto k : order) out.push_back(classes[k]);
  return out;
}

double Classifier::value(const learners::FeatureVector& x, const std::string& cls) const {
  if (const auto* t = std::get_if<learners::ClassTree>(&model_)) {
    for (auto& [c, p] : t->predict(x).distribution) {
      if (c == cls) return p;
    }
    return 0.0;
  }
  const auto& m = std::get<learners::LinearModel>(model_);
  const auto scores = m.scores(x.tokens());
  for (std::size_t k = 0; k < scores.size(); ++k) {
    if (m.classes()[k] == cls) return scores[k];
  }
  return 0.0;
}

void Classifier::write(ByteWriter& w) const {
  if (const auto* t = std::get_if<learners::ClassTree>(&model_)) {
    w.u8('C');
    t->write(w);
  } else {
    w.u8('L');
    std::get<learners::LinearModel>(model_).write(w);
  }
}

Classifier Classifier::read(ByteReader& r) {
  Classifier c;
  const auto kind = r.u8();
  if (kind == 'C') {
    c.model_ = learners::ClassTree::read(r);
  } else if (kind == 'L') {
    c.model_ = learners::LinearModel::read(r);
  } else {
    r.fail("unknown classifier kind");
  }
  return c;
}

}  // namespace lsk::processors
