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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsk/corpusforge/cleaning.hpp"
#include "lsk/corpusforge/lexicon.hpp"

namespace lsk::processors {
struct TaskModel;
}

namespace lsk::corpusforge {

using Triphone = std::array<std::string, 3>;

class TriphoneTable {
 public:
  void add(const Triphone& t, std::uint64_t n = 1);
  void merge(const TriphoneTable& other);
  std::uint64_t count(const Triphone& t) const;
  std::uint64_t total() const { return total_; }
  std::size_t types() const { return counts_.size(); }
  const std::map<Triphone, std::uint64_t>& counts() const { return counts_; }
  // Cached; any add or merge invalidates it.
  std::uint64_t h_index() const;

  // `p1 p2 p3<TAB>count` per line, sorted by triphone.
  std::string to_tsv() const;

  bool operator==(const TriphoneTable& o) const { return counts_ == o.counts_; }

 private:
  std::map<Triphone, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  mutable std::optional<std::uint64_t> h_;
};

// Largest h such that at least h of `counts` are >= h.
std::uint64_t h_index(std::vector<std::uint64_t> counts);

// Triples of the sequence padded with one boundary symbol at each end.
std::vector<Triphone> sentence_triphones(std::span<const std::string> phones,
                                         const std::string& boundary = "#");

// Sentences without phones are skipped and reported in `warnings`.
TriphoneTable triphone_histogram(std::span<const CandidateSentence> sentences,
                                 const std::string& boundary = "#",
                                 std::vector<std::string>* warnings = nullptr);
TriphoneTable triphone_histogram_parallel(std::span<const CandidateSentence> sentences,
                                          int jobs, const std::string& boundary = "#",
                                          std::vector<std::string>* warnings = nullptr);

struct BalanceParams {
  std::uint64_t rare = 100;  // counts strictly below this are rare
  std::string boundary = "#";
};

// Decisions read only `table`. Throws E_NO_PHONES for a sentence without
// phones.
std::vector<CandidateSentence> select_balanced(std::span<const CandidateSentence> sentences,
                                               const TriphoneTable& table,
                                               const BalanceParams& params = {});

// Ascending by the smallest triphone count in the sentence, then by id
// (digit runs compared numerically).
std::vector<CandidateSentence> sort_rarity(std::span<const CandidateSentence> sentences,
                                           const TriphoneTable& table,
                                           const std::string& boundary = "#");
std::uint64_t rarity_key(std::span<const std::string> phones, const TriphoneTable& table,
                         const std::string& boundary = "#");
bool id_less(const std::string& a, const std::string& b);

// Lexicon pronunciation per word, LTS model as fallback; punctuation is
// skipped. Returns nullopt (and the first unknown word) when a word has
// neither.
std::optional<std::vector<std::string>> phonetize(std::span<const std::string> tokens,
                                                  const Lexicon& lexicon,
                                                  const processors::TaskModel* lts,
                                                  std::string* unknown = nullptr);
// Fills `phones` of each sentence; returns ids that could not be phonetized.
std::vector<std::string> phonetize_all(std::span<CandidateSentence> sentences,
                                       const Lexicon& lexicon, const processors::TaskModel* lts,
                                       int jobs = 1);

}  // namespace lsk::corpusforge
