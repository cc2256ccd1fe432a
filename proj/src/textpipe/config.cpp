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

#include "lsk/textpipe/config.hpp"

#include <algorithm>
#include <set>

#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::textpipe {

void Registry::add(ProcessorInfo info) { infos_.push_back(std::move(info)); }

const ProcessorInfo* Registry::find(std::string_view key) const {
  for (const auto& i : infos_) {
    if (i.key == key) return &i;
  }
  return nullptr;
}

const ProcessorInfo* Registry::find(std::string_view key, Role role) const {
  const auto* i = find(key);
  return (i && i->role == role) ? i : nullptr;
}

const ProcessorInfo* Registry::producer_of(Attribute a) const {
  for (const auto& i : infos_) {
    if (i.role != Role::kStage) continue;
    if (std::find(i.produces.begin(), i.produces.end(), a) != i.produces.end()) return &i;
  }
  return nullptr;
}

const StageOptions& PipelineConfig::options_for(std::string_view key) const {
  static const StageOptions kEmpty;
  auto it = options.find(std::string(key));
  return it == options.end() ? kEmpty : it->second;
}

namespace {

enum class Section { kNone, kInput, kPipeline, kOutput, kOptions };

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return utf8::trim(line);
}

}  // namespace

void check_dependencies(const PipelineConfig& config, const Registry& registry) {
  std::map<Attribute, std::string> owner;
  if (const auto* in = registry.find(config.input)) {
    for (auto a : in->produces) owner[a] = in->key;
  }
  owner.emplace(Attribute::kWordform, config.input);
  for (const auto& key : config.stages) {
    const auto* info = registry.find(key, Role::kStage);
    if (!info) throw Error(Errc::kUnknownProcessor, key);
    for (auto a : info->requires_attrs) {
      if (owner.count(a)) continue;
      const auto* producer = registry.producer_of(a);
      throw Error(Errc::kStageDependency,
                  key + " requires " + std::string(attribute_name(a)) + ", produced by " +
                      (producer ? producer->key : std::string("no registered stage")) +
                      ", which does not run earlier");
    }
    for (auto a : info->produces) {
      auto [it, inserted] = owner.emplace(a, key);
      if (!inserted) {
        throw Error(Errc::kStageConflict, key + " would overwrite " +
                                              std::string(attribute_name(a)) + " owned by " +
                                              it->second);
      }
    }
  }
}

PipelineConfig parse_config(std::string_view source, const Registry& registry) {
  PipelineConfig cfg;
  std::set<Section> seen;
  std::vector<std::string> inputs, outputs;
  std::vector<std::pair<std::string, std::string>> raw_options;  // "stage.key", value
  Section current = Section::kNone;
  std::size_t line_no = 0;

  for (const auto& raw_line : utf8::split(source, '\n')) {
    ++line_no;
    const auto line = strip_comment(raw_line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(Errc::kConfigSyntax, "line " + std::to_string(line_no) + ": bad header");
      }
      const auto name = line.substr(1, line.size() - 2);
      if (name == "Input") current = Section::kInput;
      else if (name == "Pipeline") current = Section::kPipeline;
      else if (name == "Output") current = Section::kOutput;
      else if (name == "Options") current = Section::kOptions;
      else {
        throw Error(Errc::kConfigSyntax, "line " + std::to_string(line_no) +
                                             ": unknown section [" + std::string(name) + "]");
      }
      if (!seen.insert(current).second) {
        throw Error(Errc::kConfigSyntax, "line " + std::to_string(line_no) + ": duplicate section [" +
                                             std::string(name) + "]");
      }
      continue;
    }
    switch (current) {
      case Section::kNone:
        throw Error(Errc::kConfigSyntax,
                    "line " + std::to_string(line_no) + ": entry outside any section");
      case Section::kInput:
        inputs.emplace_back(line);
        break;
      case Section::kPipeline:
        cfg.stages.emplace_back(line);
        break;
      case Section::kOutput:
        outputs.emplace_back(line);
        break;
      case Section::kOptions: {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
          throw Error(Errc::kConfigSyntax,
                      "line " + std::to_string(line_no) + ": expected stage.key=value");
        }
        raw_options.emplace_back(std::string(utf8::trim(line.substr(0, eq))),
                                 std::string(utf8::trim(line.substr(eq + 1))));
        break;
      }
    }
  }

  for (auto s : {Section::kInput, Section::kPipeline, Section::kOutput}) {
    if (!seen.count(s)) {
      const char* name = s == Section::kInput ? "[Input]" : s == Section::kPipeline ? "[Pipeline]"
                                                                                   : "[Output]";
      throw Error(Errc::kConfigSection, std::string("missing section ") + name);
    }
  }
  if (inputs.size() != 1) {
    throw Error(Errc::kConfigCardinality,
                "[Input] needs exactly one entry, found " + std::to_string(inputs.size()));
  }
  if (outputs.size() != 1) {
    throw Error(Errc::kConfigCardinality,
                "[Output] needs exactly one entry, found " + std::to_string(outputs.size()));
  }
  cfg.input = inputs.front();
  cfg.output = outputs.front();
  if (!registry.find(cfg.input, Role::kInput)) throw Error(Errc::kUnknownProcessor, cfg.input);
  for (const auto& s : cfg.stages) {
    if (!registry.find(s, Role::kStage)) throw Error(Errc::kUnknownProcessor, s);
  }
  if (!registry.find(cfg.output, Role::kOutput)) throw Error(Errc::kUnknownProcessor, cfg.output);

  std::vector<std::string> declared{cfg.input, cfg.output};
  declared.insert(declared.end(), cfg.stages.begin(), cfg.stages.end());
  for (auto& [qualified, value] : raw_options) {
    // Longest declared key that prefixes "key." wins.
    const std::string* stage = nullptr;
    for (const auto& k : declared) {
      if (qualified.size() > k.size() + 1 && qualified.compare(0, k.size(), k) == 0 &&
          qualified[k.size()] == '.' && (!stage || k.size() > stage->size())) {
        stage = &k;
      }
    }
    if (!stage) {
      cfg.warnings.push_back("option " + qualified + " does not name a configured processor");
      continue;
    }
    const auto option = qualified.substr(stage->size() + 1);
    const auto* info = registry.find(*stage);
    if (std::find(info->options.begin(), info->options.end(), option) == info->options.end()) {
      cfg.warnings.push_back("unknown option " + option + " for " + *stage);
    }
    cfg.options[*stage][option] = value;
  }

  check_dependencies(cfg, registry);
  return cfg;
}

std::string serialize_config(const PipelineConfig& config) {
  std::string out = "[Input]\n" + config.input + "\n[Pipeline]\n";
  for (const auto& s : config.stages) out += s + "\n";
  out += "[Output]\n" + config.output + "\n";
  if (!config.options.empty()) {
    out += "[Options]\n";
    for (const auto& [stage, opts] : config.options) {
      for (const auto& [k, v] : opts) out += stage + "." + k + "=" + v + "\n";
    }
  }
  return out;
}

}  // namespace lsk::textpipe
