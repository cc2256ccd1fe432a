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

#include "lsk/common/error.hpp"

namespace lsk {

std::string_view error_id(Errc code) noexcept {
  switch (code) {
    case Errc::kConfigSection: return "E_CONFIG_SECTION";
    case Errc::kConfigCardinality: return "E_CONFIG_CARDINALITY";
    case Errc::kConfigSyntax: return "E_CONFIG_SYNTAX";
    case Errc::kUnknownProcessor: return "E_UNKNOWN_PROCESSOR";
    case Errc::kStageDependency: return "E_STAGE_DEPENDENCY";
    case Errc::kStageConflict: return "E_STAGE_CONFLICT";
    case Errc::kModelMissing: return "E_MODEL_MISSING";
    case Errc::kEmptyTrainset: return "E_EMPTY_TRAINSET";
    case Errc::kSlotMismatch: return "E_SLOT_MISMATCH";
    case Errc::kSlotMissing: return "E_SLOT_MISSING";
    case Errc::kDimMismatch: return "E_DIM_MISMATCH";
    case Errc::kModelFormat: return "E_MODEL_FORMAT";
    case Errc::kGoldMissing: return "E_GOLD_MISSING";
    case Errc::kNonProjective: return "E_NONPROJECTIVE";
    case Errc::kInvalidTree: return "E_INVALID_TREE";
    case Errc::kNoLexicon: return "E_NO_LEXICON";
    case Errc::kNoPhones: return "E_NO_PHONES";
    case Errc::kLabOrder: return "E_LAB_ORDER";
    case Errc::kLabFormat: return "E_LAB_FORMAT";
    case Errc::kUnknownPhoneme: return "E_UNKNOWN_PHONEME";
    case Errc::kLabelMode: return "E_LABEL_MODE";
    case Errc::kLabelFormat: return "E_LABEL_FORMAT";
    case Errc::kBadF0: return "E_BAD_F0";
    case Errc::kQueryEmpty: return "E_QUERY_EMPTY";
    case Errc::kQuerySyntax: return "E_QUERY_SYNTAX";
    case Errc::kQueryLimit: return "E_QUERY_LIMIT";
    case Errc::kDupId: return "E_DUP_ID";
    case Errc::kCorpusFormat: return "E_CORPUS_FORMAT";
    case Errc::kTsvFormat: return "E_TSV_FORMAT";
    case Errc::kInvalidArgument: return "E_INVALID_ARGUMENT";
    case Errc::kIo: return "E_IO";
    case Errc::kNotFound: return "E_NOT_FOUND";
  }
  return "E_UNKNOWN";
}

Error::Error(Errc code, std::string detail)
    : std::runtime_error(std::string(error_id(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace lsk
