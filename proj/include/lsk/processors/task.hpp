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

#include <optional>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"

namespace lsk::processors {

enum class Task { kTag, kLemma, kChunk, kParse, kSyllabify, kLts, kStress };
enum class Backend { kTree, kLinear };

inline constexpr Task kAllTasks[] = {Task::kTag,       Task::kLemma, Task::kChunk, Task::kParse,
                                     Task::kSyllabify, Task::kLts,   Task::kStress};

// Short name used on the command line and for model file names ("tag", ...).
std::string_view task_name(Task t) noexcept;
std::optional<Task> parse_task(std::string_view name) noexcept;
// Pipeline registry key ("proc.tagger", ...).
std::string_view stage_key(Task t) noexcept;
std::optional<Task> task_for_stage(std::string_view key) noexcept;

std::string_view backend_name(Backend b) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;
// Linear everywhere except the character-level tasks and stress.
Backend default_backend(Task t) noexcept;

// Versioned feature template id ("tag.v1", ...).
std::string_view template_id(Task t) noexcept;

textpipe::Attribute produced_attribute(Task t) noexcept;
std::vector<textpipe::Attribute> required_attributes(Task t);

}  // namespace lsk::processors
