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

#include "lsk/cli/cli.hpp"

#include <CLI11.hpp>

#include "commands.hpp"
#include "lsk/common/error.hpp"
#include "lsk/processors/task.hpp"

namespace lsk::cli {

namespace {

// host:port with a numeric port in [0, 65535].
const CLI::Validator kHostPort(
    [](std::string& v) -> std::string {
      const auto colon = v.rfind(':');
      if (colon == std::string::npos || colon == 0) return "expected host:port";
      const auto port = v.substr(colon + 1);
      if (port.empty() || port.size() > 5 ||
          port.find_first_not_of("0123456789") != std::string::npos || std::stoi(port) > 65535) {
        return "bad port '" + port + "'";
      }
      return "";
    },
    "HOST:PORT");

std::vector<std::string> task_choices() {
  std::vector<std::string> out;
  for (auto t : processors::kAllTasks) out.emplace_back(processors::task_name(t));
  out.emplace_back("toy-voice");
  return out;
}

void jobs_option(CLI::App* sub, int& jobs) {
  sub->add_option("--jobs", jobs, "Worker threads for the data-parallel stages")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corpus, alignment, annotation, speech synthesis and corpus search tools", "lsk"};
  app.set_config("--config", "", "INI file with one [subcommand] section; flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  CleanArgs clean;
  auto* c = app.add_subcommand("clean", "Filter raw sentences (rules a-h, î correction)");
  c->add_option("--in", clean.in, "Raw text, one candidate sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  c->add_option("--out", clean.out, "Kept sentences as id<TAB>text")->required();
  c->add_option("--audit", clean.audit, "Rejections as id<TAB>rule<TAB>evidence");
  c->add_option("--lexicon", clean.lexicon, "Word list, optional pronunciation after a tab")
      ->check(CLI::ExistingFile);
  c->add_flag("--no-lexicon", clean.no_lexicon, "Skip the lexicon rules");
  c->add_flag("--no-correct", clean.no_correct, "Keep old-orthography î");
  c->add_option("--max-words", clean.max_words, "Longest accepted sentence")->default_val(20);
  c->add_option("--coverage", clean.coverage, "Share of words that must be in the lexicon")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(0.90);
  c->add_option("--diacritics", clean.diacritics, "Share of words that must carry their diacritics")
      ->check(CLI::Range(0.0, 1.0))
      ->default_val(0.90);
  jobs_option(c, clean.jobs);

  BalanceArgs balance;
  auto* b = app.add_subcommand("balance", "Select a triphone-balanced subset");
  b->add_option("--in", balance.in, "Sentences as id<TAB>text")->required()->check(CLI::ExistingFile);
  b->add_option("--out", balance.out, "Selected sentences as id<TAB>text")->required();
  b->add_option("--lexicon", balance.lexicon, "Pronunciation lexicon")
      ->required()
      ->check(CLI::ExistingFile);
  b->add_option("--lts", balance.lts, "Letter-to-sound model for words missing from the lexicon")
      ->check(CLI::ExistingFile);
  b->add_option("--rare", balance.rare, "Counts below this are rare")->default_val(100);
  b->add_flag("--sort", balance.sort, "Order the selection by rarity");
  b->add_option("--histogram", balance.histogram, "Triphone counts as TSV");
  jobs_option(b, balance.jobs);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Phoneme duration statistics from lab files");
  s->add_option("--lab-dir", stats.lab_dir, "Directory of .lab files, one subdirectory per group")
      ->required()
      ->check(CLI::ExistingDirectory);
  s->add_option("--out", stats.out, "Statistics TSV")->required();
  s->add_option("--units", stats.units, "Lab time units")
      ->check(CLI::IsMember({"htk100ns", "ms"}))
      ->default_val("htk100ns");
  s->add_option("--group-by", stats.group_by, "dir: first subdirectory; none: one group")
      ->check(CLI::IsMember({"dir", "none"}))
      ->default_val("dir");
  jobs_option(s, stats.jobs);

  AlignArgs align;
  auto* al = app.add_subcommand("align", "Realign tokens with word-level lab files");
  al->add_option("--lab-dir", align.lab_dir, "Directory tree holding <id>.lab files")
      ->required()
      ->check(CLI::ExistingDirectory);
  al->add_option("--text", align.text, "Sentences as id<TAB>text")->required()->check(CLI::ExistingFile);
  al->add_option("--annotated", align.annotated, "TSV annotation of the same sentences, in order")
      ->check(CLI::ExistingFile);
  al->add_option("--out", align.out, "JSON Lines corpus for the query service")->required();
  al->add_option("--units", align.units, "Lab time units")
      ->check(CLI::IsMember({"htk100ns", "ms"}))
      ->default_val("htk100ns");
  al->add_option("--audio-ext", align.audio_ext, "Audio file is <id><ext>")->default_val(".wav");
  jobs_option(al, align.jobs);

  TrainArgs train;
  auto* t = app.add_subcommand("train", "Train a processor model (or write the toy voice)");
  t->add_option("--task", train.task, "Task")->required()->check(CLI::IsMember(task_choices()));
  t->add_option("--gold", train.gold, "Gold TSV corpus")->check(CLI::ExistingFile);
  t->add_option("--out", train.out, "Model file")->required();
  t->add_option("--backend", train.backend, "Override the task's default learner")
      ->check(CLI::IsMember({"linear", "tree"}));
  t->add_option("--epochs", train.epochs, "Perceptron epochs")->default_val(5);
  t->add_option("--min-leaf", train.min_leaf, "Decision tree minimum leaf size")->default_val(1);
  t->add_option("--seed", train.seed, "Shuffling seed")->default_val(1);
  t->add_option("--order", train.order, "Cepstral order of the toy voice")
      ->check(CLI::Range(1, 60))
      ->default_val(24);

  AnnotateArgs annotate;
  auto* an = app.add_subcommand("annotate", "Run a configured text pipeline");
  an->add_option("--pipeline", annotate.config, "Pipeline config")
      ->required()
      ->check(CLI::ExistingFile);
  an->add_option("--models", annotate.models, "Directory of <task>.flmd models")
      ->check(CLI::ExistingDirectory);
  an->add_option("--in", annotate.in, "Raw text")->required()->check(CLI::ExistingFile);
  an->add_option("--out", annotate.out, "Annotated output")->required();
  jobs_option(an, annotate.jobs);

  LabelArgs label;
  auto* l = app.add_subcommand("tts-label", "Context labels from an annotated TSV");
  l->add_option("--in", label.in, "Annotated TSV")->required()->check(CLI::ExistingFile);
  l->add_option("--out", label.out, "Label file")->required();
  l->add_option("--freq-corpus", label.freq_corpus, "Corpus for syllable frequencies (default: --in)")
      ->check(CLI::ExistingFile);
  l->add_option("--threshold", label.threshold, "Frequent-syllable threshold")->default_val(5);
  l->add_option("--articulation", label.articulation, "Articulatory feature overrides")
      ->check(CLI::ExistingFile);
  l->add_flag("--states", label.states, "State-level labels, as synthesis needs");
  jobs_option(l, label.jobs);

  SynthArgs synth;
  auto* sy = app.add_subcommand("synth", "Synthesize one utterance to WAV");
  sy->add_option("--voice", synth.voice, "Voice file")->required()->check(CLI::ExistingFile);
  sy->add_option("--labels", synth.labels, "State-level label file")
      ->required()
      ->check(CLI::ExistingFile);
  sy->add_option("--out", synth.out, "WAV output")->required();
  sy->add_option("--utterance", synth.utterance, "1-based utterance in the label file")
      ->default_val(1);
  sy->add_option("--seed", synth.seed, "Noise seed")->default_val(0);

  IndexArgs index;
  auto* ix = app.add_subcommand("index", "Build a search index snapshot");
  ix->add_option("--corpus", index.corpus, "JSON Lines corpus")->required()->check(CLI::ExistingFile);
  ix->add_option("--out", index.out, "Snapshot file")->required();
  ix->add_option("--name", index.name, "Corpus name");
  ix->add_option("--audio-base", index.audio_base, "Directory the audio files live in");

  ServeArgs serve;
  auto* sv = app.add_subcommand("serve", "Serve the search API over HTTP");
  sv->add_option("--bind", serve.bind, "Address to listen on")->required()->check(kHostPort);
  sv->add_option("--corpus", serve.corpus, "JSON Lines corpus to index")->check(CLI::ExistingFile);
  sv->add_option("--snapshot", serve.snapshot,
                 "Snapshot to load, or to write when --corpus is given");
  sv->add_option("--audio-dir", serve.audio_dir, "Directory served under /audio/");
  sv->add_option("--cors-origin", serve.cors_origin, "Access-Control-Allow-Origin value")
      ->default_val("*");

  try {
    app.parse(argc, argv);
    if (t->parsed() && train.task != "toy-voice" && train.gold.empty()) {
      throw CLI::RequiredError("--gold is required for --task " + train.task);
    }
    if (sv->parsed() && serve.corpus.empty() && serve.snapshot.empty()) {
      throw CLI::RequiredError("serve needs --corpus or --snapshot");
    }
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Streams io{out, err};
  try {
    if (c->parsed()) do_clean(clean, io);
    else if (b->parsed()) do_balance(balance, io);
    else if (s->parsed()) do_stats(stats, io);
    else if (al->parsed()) do_align(align, io);
    else if (t->parsed()) do_train(train, io);
    else if (an->parsed()) do_annotate(annotate, io);
    else if (l->parsed()) do_tts_label(label, io);
    else if (sy->parsed()) do_synth(synth, io);
    else if (ix->parsed()) do_index(index, io);
    else if (sv->parsed()) do_serve(serve, io);
  } catch (const Error& e) {
    err << e.id() << ": " << e.detail() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "E_IO: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace lsk::cli
