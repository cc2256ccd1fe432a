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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/textpipe/token.hpp"
#include "lsk/textpipe/tokenizer.hpp"

namespace lsk::textpipe {

class InputProcessor {
 public:
  virtual ~InputProcessor() = default;
  virtual std::vector<Sentence> read(std::string_view text) const = 0;
};

// A base processor fills in only the attributes it owns.
class StageProcessor {
 public:
  virtual ~StageProcessor() = default;
  virtual std::string_view key() const = 0;
  virtual void apply(Sentence& sentence) const = 0;
};

class OutputFormatter {
 public:
  virtual ~OutputFormatter() = default;
  virtual std::string format(std::span<const Sentence> sentences) const = 0;
};

class BasicTokenizer final : public InputProcessor {
 public:
  explicit BasicTokenizer(TokenizerOptions options = {}) : options_(std::move(options)) {}
  std::vector<Sentence> read(std::string_view text) const override;

 private:
  TokenizerOptions options_;
};

class TsvFormatter final : public OutputFormatter {
 public:
  std::string format(std::span<const Sentence> sentences) const override;
};

// Immutable once built; run() and annotate() are reentrant.
class Pipeline {
 public:
  Pipeline(std::unique_ptr<InputProcessor> input,
           std::vector<std::unique_ptr<StageProcessor>> stages,
           std::unique_ptr<OutputFormatter> output);

  std::vector<Sentence> run(std::string_view text) const;
  void annotate(Sentence& sentence) const;
  // Annotates each sentence independently on up to `jobs` threads.
  void annotate_all(std::span<Sentence> sentences, int jobs) const;
  std::string render(std::span<const Sentence> sentences) const;
  const InputProcessor& input() const { return *input_; }

 private:
  std::unique_ptr<InputProcessor> input_;
  std::vector<std::unique_ptr<StageProcessor>> stages_;
  std::unique_ptr<OutputFormatter> output_;
};

}  // namespace lsk::textpipe
