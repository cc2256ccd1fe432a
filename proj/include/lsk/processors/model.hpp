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
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/processors/classifier.hpp"
#include "lsk/processors/task.hpp"
#include "lsk/textpipe/token.hpp"

namespace lsk::processors {

// A trained processor: task, backend, feature template and classifier.
// Stored as an FLMD container of kind 'P' with a header section and a
// classifier section.
struct TaskModel {
  Task task = Task::kTag;
  std::string template_id;
  Classifier classifier;

  Backend backend() const { return classifier.backend(); }
  Bytes to_bytes() const;
  static TaskModel from_bytes(std::span<const std::uint8_t> file);
  void save(const std::string& path) const;
  static TaskModel load(const std::string& path);
};

struct TrainSpec {
  Backend backend;
  TrainOptions options;
  explicit TrainSpec(Task t) : backend(default_backend(t)) {}
};

struct TrainReport {
  std::size_t instances = 0;
  std::vector<std::string> warnings;  // e.g. skipped non-projective sentences
};

// Training instances for `task` from a gold corpus. Throws E_GOLD_MISSING
// when a token lacks the gold attribute the task learns from.
std::vector<Instance> extract_instances(Task task, std::span<const textpipe::Sentence> corpus,
                                        std::vector<std::string>* warnings = nullptr);

TaskModel train_processor(Task task, std::span<const textpipe::Sentence> corpus,
                          const TrainSpec& spec, TrainReport* report = nullptr);

// Fills the task's attribute on every token, leaving all other attributes
// untouched. Throws E_STAGE_DEPENDENCY when a required attribute is absent.
void apply_processor(const TaskModel& model, textpipe::Sentence& sentence);

}  // namespace lsk::processors
