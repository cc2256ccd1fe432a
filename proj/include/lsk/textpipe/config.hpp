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
#include <string>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"

namespace lsk::textpipe {

enum class Role { kInput, kStage, kOutput };

// Static description of a processor: what it needs, what it fills in and
// which per-stage options it understands.
struct ProcessorInfo {
  std::string key;
  Role role = Role::kStage;
  std::vector<Attribute> requires_attrs;
  std::vector<Attribute> produces;
  std::vector<std::string> options;
};

class Registry {
 public:
  void add(ProcessorInfo info);
  const ProcessorInfo* find(std::string_view key) const;
  const ProcessorInfo* find(std::string_view key, Role role) const;
  // First registered stage producing `a`, or nullptr.
  const ProcessorInfo* producer_of(Attribute a) const;
  const std::vector<ProcessorInfo>& all() const { return infos_; }

 private:
  std::vector<ProcessorInfo> infos_;
};

using StageOptions = std::map<std::string, std::string>;

struct PipelineConfig {
  std::string input;
  std::vector<std::string> stages;
  std::string output;
  std::map<std::string, StageOptions> options;  // processor key -> option -> value
  std::vector<std::string> warnings;             // not part of equality

  const StageOptions& options_for(std::string_view key) const;
  bool operator==(const PipelineConfig& o) const {
    return input == o.input && stages == o.stages && output == o.output && options == o.options;
  }
};

// Parses the INI-like config (`[Input]`, `[Pipeline]`, `[Output]`, optional
// `[Options]` with `stage.key=value` lines; `#` starts a comment), resolves
// keys against `registry` and checks stage dependencies and attribute
// ownership. Unknown options become warnings.
PipelineConfig parse_config(std::string_view source, const Registry& registry);
std::string serialize_config(const PipelineConfig& config);

// Dependency/ownership check on an already-parsed config.
void check_dependencies(const PipelineConfig& config, const Registry& registry);

}  // namespace lsk::textpipe
