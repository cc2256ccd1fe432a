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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/queryservice/corpus.hpp"

namespace lsk::queryservice {

struct Position {
  std::uint32_t utterance = 0;  // index into IndexedCorpus::utterances()
  std::uint32_t token = 0;
  auto operator<=>(const Position&) const = default;
};

using Postings = std::map<std::string, std::vector<Position>, std::less<>>;

// Immutable after construction. Utterances are kept in natural id order;
// every token appears once in each of the three posting maps (missing lemma
// or pos under the empty key).
class IndexedCorpus {
 public:
  IndexedCorpus() = default;
  // E_DUP_ID on a repeated utterance id.
  static IndexedCorpus build(std::vector<CorpusUtterance> utterances, std::string name = "",
                             std::string audio_base = "");

  const std::vector<CorpusUtterance>& utterances() const { return utterances_; }
  const CorpusUtterance* find(std::string_view id) const;
  const Postings& words() const { return words_; }    // casefolded keys
  const Postings& lemmas() const { return lemmas_; }  // casefolded keys
  const Postings& pos() const { return pos_; }
  const std::string& name() const { return name_; }
  const std::string& audio_base() const { return audio_base_; }
  std::size_t token_count() const;

  // Snapshot: magic FLIX, format version, payload, FNV-1a checksum.
  Bytes snapshot() const;
  // E_MODEL_FORMAT on a damaged or foreign file.
  static IndexedCorpus from_snapshot(std::span<const std::uint8_t> bytes);
  void save(const std::string& path) const;
  static IndexedCorpus load(const std::string& path);
  // Checksum of the snapshot bytes.
  std::uint64_t fingerprint() const;

  bool operator==(const IndexedCorpus& o) const {
    return name_ == o.name_ && audio_base_ == o.audio_base_ && utterances_ == o.utterances_;
  }

 private:
  std::string name_;
  std::string audio_base_;
  std::vector<CorpusUtterance> utterances_;
  Postings words_, lemmas_, pos_;
};

}  // namespace lsk::queryservice
