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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "harness.hpp"
#include "lsk/common/binary_io.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/learners/feature.hpp"
#include "lsk/textpipe/tsv.hpp"
#include "lsk/ttsback/mlsa.hpp"
#include "lsk/ttsback/synth.hpp"
#include "lsk/ttsback/voice.hpp"
#include "lsk/ttsfront/labels.hpp"

namespace lsk::acceptance {

namespace {

// dB magnitude of exp(sum c(m) z~^-m) on the unit circle, with the all-pass
// warped frequency computed directly.
double exact_db(const std::vector<double>& c, double alpha, double w) {
  const double wt = std::atan2((1 - alpha * alpha) * std::sin(w), (1 + alpha * alpha) * std::cos(w) - 2 * alpha);
  double s = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) s += c[m] * std::cos(wt * static_cast<double>(m));
  return 20.0 * s / std::numbers::ln10;
}

// Worst dB deviation of the filter's impulse-response spectrum (plain DFT)
// from the exact response, on 161 points up to 0.8 of Nyquist.
double max_db_error(const std::vector<double>& c, double alpha) {
  const int order = static_cast<int>(c.size()) - 1;
  ttsback::MlsaFilter filter(order, alpha);
  const auto b = ttsback::mc2b(c, alpha);
  std::vector<double> h(4096);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = filter(i == 0 ? 1.0 : 0.0, b);
  double worst = 0.0;
  for (int k = 0; k <= 160; ++k) {
    const double w = 0.8 * std::numbers::pi * k / 160.0;
    std::complex<double> sum = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) sum += h[n] * std::polar(1.0, -w * static_cast<double>(n));
    worst = std::max(worst, std::abs(20.0 * std::log10(std::abs(sum)) - exact_db(c, alpha, w)));
  }
  return worst;
}

textpipe::Token annotated(std::string form, std::vector<std::string> phones, std::vector<textpipe::Span> syl,
                          std::size_t stress, std::string pos, std::string chunk) {
  textpipe::Token t;
  t.wordform = std::move(form);
  t.transcription = std::move(phones);
  t.syllables = std::move(syl);
  t.stress = stress;
  t.pos = std::move(pos);
  t.chunk = std::move(chunk);
  return t;
}

// "Mamă !" annotated by hand.
textpipe::Sentence mama() {
  textpipe::Sentence s;
  s.id = "g1";
  textpipe::Token bang;
  bang.wordform = "!";
  bang.pos = "PUNCT";
  bang.chunk = "O";
  s.tokens = {annotated("Mamă", {"m", "a", "m", "@"}, {{0, 2}, {2, 4}}, 0, "Nc", "B-NP"), bang};
  return s;
}

ttsfront::SyllableFreqTable table_with(std::map<std::string, std::uint64_t> counts) {
  ttsfront::SyllableFreqTable t;
  t.counts = std::move(counts);
  return t;
}

std::vector<textpipe::Sentence> treebank() {
  return textpipe::read_tsv(read_text_file(fixture("treebank.tsv")));
}

}  // namespace

void vocoder(Outcome& o) {
  using namespace lsk::ttsback;
  Rng rng(727);

  std::vector<double> x(1600);
  for (auto& v : x) v = rng.normal();
  const std::vector<std::vector<double>> zero(20, std::vector<double>(25, 0.0));
  const auto y = mlsa_filter(x, zero, 0.42, 24);
  double identity = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) identity = std::max(identity, std::abs(y[i] - x[i]));
  o.expect(y.size() == x.size() && identity <= 1e-6, "zero cepstrum identity");

  double worst_db = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c(25);
    for (auto& v : c) v = rng.uniform(-0.2, 0.2);
    const double e = max_db_error(c, 0.42);
    worst_db = std::max(worst_db, e);
    o.expect(e <= 1.0, "magnitude error " + std::to_string(e) + " dB");
  }

  const auto voice = toy_voice();
  o.expect(voice.sample_rate == 16000 && voice.frame_shift_ms == 5.0 && voice.samples_per_frame() == 80,
           "voice runs at 16 kHz with a 5 ms shift");
  auto sentences = treebank();
  sentences.resize(std::min<std::size_t>(sentences.size(), 2));
  sentences.insert(sentences.begin(), mama());
  const auto freq = ttsfront::syllable_freq_table(sentences);
  ttsfront::LabelOptions states;
  states.state_level = true;
  std::size_t samples = 0;
  for (const auto& s : sentences) {
    std::vector<std::vector<std::string>> labels;
    for (const auto& l : ttsfront::build_labels(s, freq, ttsfront::ArticulatoryMap::defaults(), states)) {
      labels.push_back(label_tokens(l));
    }
    const auto frames = predict_streams(voice, labels).frames();
    const auto wav = synthesize(voice, labels, 2024);
    const auto w = parse_wav(wav);
    o.expect(w.sample_rate == 16000, s.id + " sample rate");
    o.expect(w.samples.size() == frames * 80, s.id + ": " + std::to_string(w.samples.size()) +
                                                  " samples for " + std::to_string(frames) + " frames");
    o.expect(synthesize(voice, labels, 2024) == wav, s.id + " bytes differ between runs");
    samples += w.samples.size();
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "identity max |err| %.1e; worst magnitude error %.2e dB; %zu samples synthesized",
                identity, worst_db, samples);
  o.summarize(buf);
}

void labels(Outcome& o) {
  using namespace lsk::ttsfront;
  const auto art = ArticulatoryMap::defaults();
  const std::vector<std::vector<ContextLabel>> golden{build_labels(mama(), table_with({{"ma", 7}, {"mă", 2}}), art)};
  o.expect(label_file(golden) == read_text_file(fixture("labels_golden.lab")), "golden label file differs");

  std::size_t tokens = 0, labels = 0;
  const auto tb = treebank();
  const auto freq = syllable_freq_table(tb);
  LabelOptions states;
  states.state_level = true;
  for (const auto& s : tb) {
    for (const auto& opt : {LabelOptions{}, states}) {
      for (const auto& l : build_labels(s, freq, art, opt)) {
        ++labels;
        for (const auto& f : l.features) {
          ++tokens;
          o.expect(f.find_first_of(" \t\n/") == std::string::npos && learners::valid_feature_token(f),
                   s.id + " token '" + f + "'");
        }
      }
    }
  }

  o.expect(kFrequentSyllableThreshold == 5 && freq.threshold == 5, "default threshold is 5");
  auto fs_count = [&](std::uint64_t n) {
    std::size_t k = 0;
    for (const auto& l : build_labels(mama(), table_with({{"ma", n}}), art)) {
      k += static_cast<std::size_t>(std::count(l.features.begin(), l.features.end(), "FS=ma"));
    }
    return k;
  };
  o.expect(fs_count(5) > 0, "count 5 marks the syllable frequent");
  o.expect(fs_count(4) == 0, "count 4 is not frequent");
  o.expect(fs_count(6) == fs_count(5), "above the threshold nothing changes");
  o.summarize("golden file byte-exact; ", tokens, " tokens in ", labels, " labels clean; FS at 5 not 4");
}

}  // namespace lsk::acceptance
