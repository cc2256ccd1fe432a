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
#include <variant>
#include <vector>

#include "lsk/learners/class_tree.hpp"
#include "lsk/learners/linear_model.hpp"
#include "lsk/processors/task.hpp"

namespace lsk::processors {

struct Instance {
  learners::FeatureVector x;
  std::string label;
};

struct TrainOptions {
  learners::ClassTreeParams tree;
  learners::LinearParams linear;
};

// Either learner behind one interface. Linear models see the "slot=value"
// tokens of the feature vector.
class Classifier {
 public:
  static Classifier train(Backend backend, std::span<const Instance> data,
                          const TrainOptions& options = {});

  Backend backend() const;
  std::string predict(const learners::FeatureVector& x) const;
  // Classes from most to least preferred (probability for trees, score for
  // linear models; ties keep inventory order).
  std::vector<std::string> ranked(const learners::FeatureVector& x) const;
  // Preference value of `cls` (probability or score); 0 for unknown classes.
  double value(const learners::FeatureVector& x, const std::string& cls) const;

  void write(ByteWriter& w) const;
  static Classifier read(ByteReader& r);

 private:
  std::variant<learners::ClassTree, learners::LinearModel> model_;
};

}  // namespace lsk::processors
