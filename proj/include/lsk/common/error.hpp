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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsk {

// Machine-readable error identifiers shared by every module. The textual id
// (E_...) is what the CLI prints and what the HTTP API returns.
enum class Errc {
  kConfigSection,
  kConfigCardinality,
  kConfigSyntax,
  kUnknownProcessor,
  kStageDependency,
  kStageConflict,
  kModelMissing,
  kEmptyTrainset,
  kSlotMismatch,
  kSlotMissing,
  kDimMismatch,
  kModelFormat,
  kGoldMissing,
  kNonProjective,
  kInvalidTree,
  kNoLexicon,
  kNoPhones,
  kLabOrder,
  kLabFormat,
  kUnknownPhoneme,
  kLabelMode,
  kLabelFormat,
  kBadF0,
  kQueryEmpty,
  kQuerySyntax,
  kQueryLimit,
  kDupId,
  kCorpusFormat,
  kTsvFormat,
  kInvalidArgument,
  kIo,
  kNotFound,
};

std::string_view error_id(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail);

  Errc code() const noexcept { return code_; }
  std::string_view id() const noexcept { return error_id(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace lsk
