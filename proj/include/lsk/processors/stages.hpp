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

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/processors/model.hpp"
#include "lsk/textpipe/config.hpp"
#include "lsk/textpipe/pipeline.hpp"

namespace lsk::processors {

// Registry with the tokenizer, the seven task stages and the TSV formatter.
const textpipe::Registry& default_registry();

class TaskStage final : public textpipe::StageProcessor {
 public:
  explicit TaskStage(std::shared_ptr<const TaskModel> model) : model_(std::move(model)) {}
  std::string_view key() const override { return stage_key(model_->task); }
  void apply(textpipe::Sentence& sentence) const override { apply_processor(*model_, sentence); }

 private:
  std::shared_ptr<const TaskModel> model_;
};

// Loaded models by task.
class ModelSet {
 public:
  void add(TaskModel model);
  std::shared_ptr<const TaskModel> find(Task task) const;
  // Loads every `<dir>/<task>.flmd` that exists.
  static ModelSet load_dir(const std::string& dir);
  std::size_t size() const { return models_.size(); }

 private:
  std::map<Task, std::shared_ptr<const TaskModel>> models_;
};

// Builds the pipeline a config describes. A stage's `model` option names a
// model file that takes precedence over `models`; a stage with neither
// fails with E_MODEL_MISSING.
textpipe::Pipeline build_pipeline(const textpipe::PipelineConfig& config, const ModelSet& models);

std::vector<textpipe::Sentence> run_pipeline(const textpipe::PipelineConfig& config,
                                             const ModelSet& models, std::string_view text);

}  // namespace lsk::processors
