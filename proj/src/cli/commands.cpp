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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <map>
#include <memory>

#include "lsk/aligner/lab.hpp"
#include "lsk/aligner/realign.hpp"
#include "lsk/aligner/stats.hpp"
#include "lsk/cli/cli.hpp"
#include "lsk/common/binary_io.hpp"
#include "lsk/common/error.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/corpusforge/cleaning.hpp"
#include "lsk/corpusforge/lexicon.hpp"
#include "lsk/corpusforge/triphones.hpp"
#include "lsk/processors/model.hpp"
#include "lsk/processors/stages.hpp"
#include "lsk/queryservice/corpus.hpp"
#include "lsk/queryservice/index.hpp"
#include "lsk/queryservice/server.hpp"
#include "lsk/textpipe/config.hpp"
#include "lsk/textpipe/tokenizer.hpp"
#include "lsk/textpipe/tsv.hpp"
#include "lsk/ttsback/synth.hpp"
#include "lsk/ttsback/voice.hpp"
#include "lsk/ttsfront/labels.hpp"

namespace fs = std::filesystem;

namespace lsk::cli {

namespace {

using corpusforge::CandidateSentence;

// `id<TAB>text` lines; a line without a tab gets its line number as id.
std::vector<CandidateSentence> read_sentence_lines(const std::string& path) {
  std::vector<CandidateSentence> out;
  std::size_t line_no = 0;
  for (auto line : utf8::split(read_text_file(path), '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty()) continue;
    CandidateSentence s;
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      s.id = line.substr(0, tab);
      s.raw = line.substr(tab + 1);
    } else {
      s.id = std::to_string(line_no);
      s.raw = line;
    }
    s.tokens = textpipe::tokenize_words(s.raw);
    out.push_back(std::move(s));
  }
  return out;
}

std::string sentence_lines(std::span<const CandidateSentence> sentences) {
  std::string out;
  for (const auto& s : sentences) out += s.id + '\t' + s.raw + '\n';
  return out;
}

std::vector<fs::path> lab_files(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".lab") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First directory below the lab root, "all" for files directly in it.
std::string group_of(const fs::path& file, const std::string& root) {
  const auto rel = fs::relative(file.parent_path(), root);
  return rel == "." ? "all" : rel.begin()->string();
}

// Lab files under `dir` by utterance id (file stem); E_DUP_ID on a clash.
std::map<std::string, fs::path> labs_by_id(const std::string& dir) {
  std::map<std::string, fs::path> out;
  for (const auto& p : lab_files(dir)) {
    if (!out.emplace(p.stem().string(), p).second) {
      throw Error(Errc::kDupId, "two lab files for utterance " + p.stem().string());
    }
  }
  return out;
}

std::atomic<queryservice::QueryServer*> g_server{nullptr};

extern "C" void on_signal(int) { request_shutdown(); }

}  // namespace

void request_shutdown() {
  if (auto* s = g_server.load()) s->stop();
}

void do_clean(const CleanArgs& a, Streams io) {
  corpusforge::CleaningConfig cfg;
  cfg.max_words = a.max_words;
  cfg.lexicon_coverage = a.coverage;
  cfg.diacritics = a.diacritics;
  cfg.use_lexicon = !a.no_lexicon;
  cfg.correct = !a.no_correct;
  corpusforge::Lexicon lexicon;
  if (!a.lexicon.empty()) {
    lexicon = corpusforge::Lexicon::load(a.lexicon);
    cfg.lexicon = &lexicon;
  }
  cfg.validate();
  const auto sentences = corpusforge::read_lines(read_text_file(a.in));
  const auto r = corpusforge::clean_parallel(sentences, cfg, a.jobs);
  write_text_file(a.out, sentence_lines(r.kept));
  if (!a.audit.empty()) write_text_file(a.audit, corpusforge::audit_tsv(r.audit));
  io.err << "kept " << r.kept.size() << " of " << sentences.size() << " sentences\n";
}

void do_balance(const BalanceArgs& a, Streams io) {
  const auto lexicon = corpusforge::Lexicon::load(a.lexicon);
  std::optional<processors::TaskModel> lts;
  if (!a.lts.empty()) lts = processors::TaskModel::load(a.lts);
  auto sentences = read_sentence_lines(a.in);
  const auto failed =
      corpusforge::phonetize_all(sentences, lexicon, lts ? &*lts : nullptr, a.jobs);
  for (const auto& id : failed) io.err << "warning: sentence " << id << " has no pronunciation\n";
  std::erase_if(sentences, [](const CandidateSentence& s) { return !s.phones; });
  const corpusforge::BalanceParams params{a.rare, "#"};
  const auto table = corpusforge::triphone_histogram_parallel(sentences, a.jobs, params.boundary);
  auto kept = corpusforge::select_balanced(sentences, table, params);
  if (a.sort) kept = corpusforge::sort_rarity(kept, table, params.boundary);
  write_text_file(a.out, sentence_lines(kept));
  if (!a.histogram.empty()) write_text_file(a.histogram, table.to_tsv());
  io.err << "h-index " << table.h_index() << ", kept " << kept.size() << " of "
         << sentences.size() << " sentences\n";
}

void do_stats(const StatsArgs& a, Streams io) {
  const auto units = aligner::parse_units(a.units);
  std::vector<aligner::AlignedUtterance> utts;
  for (const auto& p : lab_files(a.lab_dir)) {
    aligner::AlignedUtterance u;
    u.id = p.stem().string();
    u.group = group_of(p, a.lab_dir);
    try {
      u.segments = aligner::parse_word_lab(read_text_file(p.string()), units).segments;
    } catch (const Error& e) {
      throw Error(e.code(), p.string() + ": " + e.detail());
    }
    utts.push_back(std::move(u));
  }
  const auto key = a.group_by == "none" ? aligner::single_group() : aligner::group_by_field();
  const auto groups = aligner::corpus_stats_parallel(utts, key, a.jobs);
  write_text_file(a.out, aligner::stats_tsv(groups));
  io.err << utts.size() << " lab files, " << aligner::hours_display(aligner::overall(groups).total_ms())
         << " h\n";
}

void do_align(const AlignArgs& a, Streams io) {
  const auto units = aligner::parse_units(a.units);
  const auto sentences = read_sentence_lines(a.text);
  std::vector<textpipe::Sentence> annotated;
  if (!a.annotated.empty()) {
    annotated = textpipe::read_tsv(read_text_file(a.annotated));
    if (annotated.size() != sentences.size()) {
      throw Error(Errc::kCorpusFormat, "annotation has " + std::to_string(annotated.size()) +
                                           " sentences, text has " +
                                           std::to_string(sentences.size()));
    }
  }
  const auto labs = labs_by_id(a.lab_dir);
  std::vector<aligner::AlignedUtterance> utts;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    const auto found = labs.find(s.id);
    if (found == labs.end()) throw Error(Errc::kIo, "no lab file for utterance " + s.id);
    const auto path = found->second.string();
    aligner::AlignedUtterance u;
    u.id = s.id;
    u.group = group_of(found->second, a.lab_dir);
    u.audio_file = s.id + a.audio_ext;
    try {
      auto lab = aligner::parse_word_lab(read_text_file(path), units);
      u.segments = std::move(lab.segments);
      u.words = std::move(lab.words);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.detail());
    }
    if (annotated.empty()) {
      u.tokens = s.tokens;
    } else {
      for (const auto& t : annotated[i].tokens) u.tokens.push_back(t.wordform);
    }
    utts.push_back(std::move(u));
  }
  aligner::realign_all(utts, a.jobs);
  std::vector<queryservice::CorpusUtterance> corpus;
  std::size_t unaligned = 0;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    corpus.push_back(queryservice::from_aligned(utts[i], annotated.empty() ? nullptr : &annotated[i]));
    for (const auto& t : corpus.back().tokens) unaligned += !t.span;
  }
  write_text_file(a.out, queryservice::corpus_jsonl(corpus));
  io.err << utts.size() << " utterances aligned, " << unaligned << " tokens without timing\n";
}

void do_train(const TrainArgs& a, Streams io) {
  if (a.task == "toy-voice") {
    ttsback::toy_voice(a.order).save(a.out);
    io.err << "wrote toy voice (order " << a.order << ")\n";
    return;
  }
  const auto task = *processors::parse_task(a.task);
  const auto gold = textpipe::read_tsv(read_text_file(a.gold));
  processors::TrainSpec spec(task);
  if (!a.backend.empty()) spec.backend = *processors::parse_backend(a.backend);
  spec.options.linear.epochs = a.epochs;
  spec.options.linear.seed = a.seed;
  spec.options.tree.min_leaf = a.min_leaf;
  processors::TrainReport report;
  const auto model = processors::train_processor(task, gold, spec, &report);
  model.save(a.out);
  for (const auto& w : report.warnings) io.err << "warning: " << w << '\n';
  io.err << a.task << ": " << report.instances << " instances, "
         << processors::backend_name(model.backend()) << " backend\n";
}

void do_annotate(const AnnotateArgs& a, Streams io) {
  const auto config =
      textpipe::parse_config(read_text_file(a.config), processors::default_registry());
  for (const auto& w : config.warnings) io.err << "warning: " << w << '\n';
  const auto models = a.models.empty() ? processors::ModelSet{}
                                       : processors::ModelSet::load_dir(a.models);
  const auto pipeline = processors::build_pipeline(config, models);
  auto sentences = pipeline.input().read(read_text_file(a.in));
  pipeline.annotate_all(sentences, a.jobs);
  write_text_file(a.out, pipeline.render(sentences));
  io.err << sentences.size() << " sentences annotated\n";
}

void do_tts_label(const LabelArgs& a, Streams io) {
  const auto corpus = textpipe::read_tsv(read_text_file(a.in));
  const auto freq_corpus =
      a.freq_corpus.empty() ? corpus : textpipe::read_tsv(read_text_file(a.freq_corpus));
  const auto table = ttsfront::syllable_freq_table(freq_corpus, a.threshold);
  const auto art = a.articulation.empty()
                       ? ttsfront::ArticulatoryMap::defaults()
                       : ttsfront::ArticulatoryMap::parse(read_text_file(a.articulation));
  ttsfront::LabelOptions options;
  options.state_level = a.states;
  const auto labels = ttsfront::build_labels_all(corpus, table, art, options, a.jobs);
  write_text_file(a.out, ttsfront::label_file(labels));
  io.err << labels.size() << " utterances labelled\n";
}

void do_synth(const SynthArgs& a, Streams io) {
  const auto voice = ttsback::VoiceModel::load(a.voice);
  const auto utts = ttsfront::read_label_file(read_text_file(a.labels));
  if (a.utterance == 0 || a.utterance > utts.size()) {
    throw Error(Errc::kInvalidArgument, "utterance " + std::to_string(a.utterance) +
                                            " requested, label file holds " +
                                            std::to_string(utts.size()));
  }
  const auto wav = ttsback::synthesize(voice, utts[a.utterance - 1], a.seed);
  write_binary_file(a.out, wav);
  io.err << (wav.size() - 44) / 2 << " samples at " << voice.sample_rate << " Hz\n";
}

void do_index(const IndexArgs& a, Streams io) {
  auto corpus = queryservice::read_corpus_jsonl(read_text_file(a.corpus));
  const auto index = queryservice::IndexedCorpus::build(std::move(corpus), a.name, a.audio_base);
  index.save(a.out);
  io.err << index.utterances().size() << " utterances, " << index.token_count() << " tokens\n";
}

void do_serve(const ServeArgs& a, Streams io) {
  const auto colon = a.bind.rfind(':');
  const auto host = a.bind.substr(0, colon);
  const int port = std::stoi(a.bind.substr(colon + 1));
  std::shared_ptr<const queryservice::IndexedCorpus> index;
  if (!a.corpus.empty()) {
    auto built = queryservice::IndexedCorpus::build(
        queryservice::read_corpus_jsonl(read_text_file(a.corpus)), fs::path(a.corpus).stem().string());
    if (!a.snapshot.empty()) built.save(a.snapshot);
    index = std::make_shared<const queryservice::IndexedCorpus>(std::move(built));
  } else {
    index = std::make_shared<const queryservice::IndexedCorpus>(
        queryservice::IndexedCorpus::load(a.snapshot));
  }
  queryservice::QueryServer server(index, {a.audio_dir, a.cors_origin});
  const int bound = server.bind(host, port);
  g_server.store(&server);
  auto old_int = std::signal(SIGINT, on_signal);
  auto old_term = std::signal(SIGTERM, on_signal);
  io.out << "listening on http://" << host << ':' << bound << std::endl;
  server.listen();
  g_server.store(nullptr);
  std::signal(SIGINT, old_int);
  std::signal(SIGTERM, old_term);
}

}  // namespace lsk::cli
