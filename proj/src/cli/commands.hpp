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
#include <ostream>
#include <string>

namespace lsk::cli {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct CleanArgs {
  std::string in, out, audit, lexicon;
  bool no_lexicon = false;
  bool no_correct = false;
  std::size_t max_words = 20;
  double coverage = 0.90;
  double diacritics = 0.90;
  int jobs = 1;
};

struct BalanceArgs {
  std::string in, out, lexicon, lts, histogram;
  std::uint64_t rare = 100;
  bool sort = false;
  int jobs = 1;
};

struct StatsArgs {
  std::string lab_dir, out, units = "htk100ns", group_by = "dir";
  int jobs = 1;
};

struct AlignArgs {
  std::string lab_dir, text, annotated, out, units = "htk100ns", audio_ext = ".wav";
  int jobs = 1;
};

struct TrainArgs {
  std::string task, gold, out, backend;
  std::uint32_t epochs = 5;
  std::size_t min_leaf = 1;
  std::uint64_t seed = 1;
  int order = 24;
};

struct AnnotateArgs {
  std::string config, models, in, out;
  int jobs = 1;
};

struct LabelArgs {
  std::string in, out, freq_corpus, articulation;
  std::uint64_t threshold = 5;
  bool states = false;
  int jobs = 1;
};

struct SynthArgs {
  std::string voice, labels, out;
  std::size_t utterance = 1;
  std::uint64_t seed = 0;
};

struct IndexArgs {
  std::string corpus, out, name, audio_base;
};

struct ServeArgs {
  std::string bind, corpus, snapshot, audio_dir, cors_origin = "*";
};

void do_clean(const CleanArgs& a, Streams io);
void do_balance(const BalanceArgs& a, Streams io);
void do_stats(const StatsArgs& a, Streams io);
void do_align(const AlignArgs& a, Streams io);
void do_train(const TrainArgs& a, Streams io);
void do_annotate(const AnnotateArgs& a, Streams io);
void do_tts_label(const LabelArgs& a, Streams io);
void do_synth(const SynthArgs& a, Streams io);
void do_index(const IndexArgs& a, Streams io);
void do_serve(const ServeArgs& a, Streams io);

}  // namespace lsk::cli
