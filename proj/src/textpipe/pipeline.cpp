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

#include "lsk/textpipe/pipeline.hpp"

#include "lsk/common/parallel.hpp"
#include "lsk/textpipe/tsv.hpp"

namespace lsk::textpipe {

std::vector<Sentence> BasicTokenizer::read(std::string_view text) const {
  return tokenize(text, options_);
}

std::string TsvFormatter::format(std::span<const Sentence> sentences) const {
  return format_tsv(sentences);
}

Pipeline::Pipeline(std::unique_ptr<InputProcessor> input,
                   std::vector<std::unique_ptr<StageProcessor>> stages,
                   std::unique_ptr<OutputFormatter> output)
    : input_(std::move(input)), stages_(std::move(stages)), output_(std::move(output)) {}

void Pipeline::annotate(Sentence& sentence) const {
  for (const auto& stage : stages_) stage->apply(sentence);
}

std::vector<Sentence> Pipeline::run(std::string_view text) const {
  auto sentences = input_->read(text);
  for (auto& s : sentences) annotate(s);
  return sentences;
}

void Pipeline::annotate_all(std::span<Sentence> sentences, int jobs) const {
  parallel_for(sentences.size(), jobs, [&](std::size_t i) { annotate(sentences[i]); });
}

std::string Pipeline::render(std::span<const Sentence> sentences) const {
  return output_->format(sentences);
}

}  // namespace lsk::textpipe
