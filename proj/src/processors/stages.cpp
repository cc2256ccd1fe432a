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

#include "lsk/processors/stages.hpp"

#include <filesystem>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::processors {

const textpipe::Registry& default_registry() {
  static const textpipe::Registry kRegistry = [] {
    textpipe::Registry r;
    r.add({"input.basic-tokenizer", textpipe::Role::kInput, {}, {textpipe::Attribute::kWordform},
           {"abbreviations"}});
    for (auto t : kAllTasks) {
      r.add({std::string(stage_key(t)), textpipe::Role::kStage, required_attributes(t),
             {produced_attribute(t)}, {"model"}});
    }
    r.add({"out.tsv", textpipe::Role::kOutput, {}, {}, {}});
    return r;
  }();
  return kRegistry;
}

void ModelSet::add(TaskModel model) {
  const auto task = model.task;
  models_[task] = std::make_shared<const TaskModel>(std::move(model));
}

std::shared_ptr<const TaskModel> ModelSet::find(Task task) const {
  auto it = models_.find(task);
  return it == models_.end() ? nullptr : it->second;
}

ModelSet ModelSet::load_dir(const std::string& dir) {
  ModelSet set;
  for (auto t : kAllTasks) {
    const auto path = std::filesystem::path(dir) / (std::string(task_name(t)) + ".flmd");
    if (!std::filesystem::exists(path)) continue;
    auto m = TaskModel::load(path.string());
    if (m.task != t) {
      throw Error(Errc::kModelFormat, path.string() + " holds a " + std::string(task_name(m.task)) +
                                          " model at byte offset 14");
    }
    set.add(std::move(m));
  }
  return set;
}

textpipe::Pipeline build_pipeline(const textpipe::PipelineConfig& config, const ModelSet& models) {
  textpipe::check_dependencies(config, default_registry());
  textpipe::TokenizerOptions tok;
  const auto& in_opts = config.options_for(config.input);
  if (auto it = in_opts.find("abbreviations"); it != in_opts.end()) {
    for (auto& a : utf8::split(it->second, ',')) {
      const auto w = std::string(utf8::trim(a));
      if (!w.empty()) tok.abbreviations.push_back(utf8::casefold(w));
    }
  }
  std::vector<std::unique_ptr<textpipe::StageProcessor>> stages;
  for (const auto& key : config.stages) {
    const auto task = task_for_stage(key);
    if (!task) throw Error(Errc::kUnknownProcessor, key);
    std::shared_ptr<const TaskModel> model;
    const auto& opts = config.options_for(key);
    if (auto it = opts.find("model"); it != opts.end()) {
      auto m = TaskModel::load(it->second);
      if (m.task != *task) {
        throw Error(Errc::kModelFormat, it->second + " holds a " + std::string(task_name(m.task)) +
                                            " model, " + key + " needs " +
                                            std::string(task_name(*task)));
      }
      model = std::make_shared<const TaskModel>(std::move(m));
    } else {
      model = models.find(*task);
    }
    if (!model) throw Error(Errc::kModelMissing, key + " has no model");
    stages.push_back(std::make_unique<TaskStage>(std::move(model)));
  }
  return textpipe::Pipeline(std::make_unique<textpipe::BasicTokenizer>(std::move(tok)),
                            std::move(stages), std::make_unique<textpipe::TsvFormatter>());
}

std::vector<textpipe::Sentence> run_pipeline(const textpipe::PipelineConfig& config,
                                             const ModelSet& models, std::string_view text) {
  return build_pipeline(config, models).run(text);
}

}  // namespace lsk::processors
