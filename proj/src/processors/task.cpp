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

#include "lsk/processors/task.hpp"

namespace lsk::processors {

namespace {

struct TaskRow {
  Task task;
  std::string_view name;
  std::string_view key;
  std::string_view template_id;
};

constexpr TaskRow kRows[] = {
    {Task::kTag, "tag", "proc.tagger", "tag.v1"},
    {Task::kLemma, "lemma", "proc.lemmatizer", "lemma.v1"},
    {Task::kChunk, "chunk", "proc.chunker", "chunk.v1"},
    {Task::kParse, "parse", "proc.parser", "parse.v1"},
    {Task::kSyllabify, "syllabify", "proc.syllabifier", "syllabify.v1"},
    {Task::kLts, "lts", "proc.lts", "lts.v1"},
    {Task::kStress, "stress", "proc.stress", "stress.v1"},
};

const TaskRow& row(Task t) { return kRows[static_cast<int>(t)]; }

}  // namespace

std::string_view task_name(Task t) noexcept { return row(t).name; }

std::optional<Task> parse_task(std::string_view name) noexcept {
  for (const auto& r : kRows) {
    if (r.name == name) return r.task;
  }
  return std::nullopt;
}

std::string_view stage_key(Task t) noexcept { return row(t).key; }

std::optional<Task> task_for_stage(std::string_view key) noexcept {
  for (const auto& r : kRows) {
    if (r.key == key) return r.task;
  }
  return std::nullopt;
}

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::kTree ? "tree" : "linear";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  if (name == "tree") return Backend::kTree;
  if (name == "linear") return Backend::kLinear;
  return std::nullopt;
}

Backend default_backend(Task t) noexcept {
  switch (t) {
    case Task::kSyllabify:
    case Task::kLts:
    case Task::kStress:
      return Backend::kTree;
    default:
      return Backend::kLinear;
  }
}

std::string_view template_id(Task t) noexcept { return row(t).template_id; }

textpipe::Attribute produced_attribute(Task t) noexcept {
  using A = textpipe::Attribute;
  switch (t) {
    case Task::kTag: return A::kPos;
    case Task::kLemma: return A::kLemma;
    case Task::kChunk: return A::kChunk;
    case Task::kParse: return A::kDependency;
    case Task::kSyllabify: return A::kSyllables;
    case Task::kLts: return A::kTranscription;
    case Task::kStress: return A::kStress;
  }
  return A::kPos;
}

std::vector<textpipe::Attribute> required_attributes(Task t) {
  using A = textpipe::Attribute;
  switch (t) {
    case Task::kLemma:
    case Task::kChunk:
    case Task::kParse:
      return {A::kPos};
    case Task::kStress:
      return {A::kSyllables};
    default:
      return {};
  }
}

}  // namespace lsk::processors
