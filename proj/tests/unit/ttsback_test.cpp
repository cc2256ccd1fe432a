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

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "lsk/common/binary_io.hpp"
#include "lsk/common/error.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/ttsback/mlsa.hpp"
#include "lsk/ttsback/synth.hpp"
#include "lsk/ttsback/voice.hpp"
#include "lsk/ttsfront/labels.hpp"

using namespace lsk;
using namespace lsk::ttsback;
using learners::RegExample;
using learners::RegLeaf;
using learners::RegTree;

namespace {

std::string err(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(e.id());
  }
  return "";
}

// Magnitude (dB) of exp(sum_m c(m) z~^-m) on the unit circle, with the
// first-order all-pass frequency warping evaluated directly.
double exact_db(const std::vector<double>& c, double alpha, double w) {
  const double wt = std::atan2((1 - alpha * alpha) * std::sin(w),
                               (1 + alpha * alpha) * std::cos(w) - 2 * alpha);
  double s = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) s += c[m] * std::cos(wt * static_cast<double>(m));
  return 20.0 * s / std::numbers::ln10;
}

std::vector<double> impulse_response(const std::vector<double>& c, double alpha, std::size_t n) {
  const int order = static_cast<int>(c.size()) - 1;
  MlsaFilter filter(order, alpha);
  const auto b = mc2b(c, alpha);
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = filter(i == 0 ? 1.0 : 0.0, b);
  return h;
}

// Largest dB deviation between the filter's impulse-response spectrum and
// the exact response, over [0, 0.8 * Nyquist].
double max_db_error(const std::vector<double>& c, double alpha) {
  const auto h = impulse_response(c, alpha, 4096);
  double worst = 0.0;
  for (int k = 0; k <= 160; ++k) {
    const double w = 0.8 * std::numbers::pi * k / 160.0;
    std::complex<double> sum = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) {
      sum += h[n] * std::polar(1.0, -w * static_cast<double>(n));
    }
    const double got = 20.0 * std::log10(std::abs(sum));
    worst = std::max(worst, std::abs(got - exact_db(c, alpha, w)));
  }
  return worst;
}

std::vector<double> random_cepstrum(Rng& rng, int order, double bound) {
  std::vector<double> c(order + 1);
  for (auto& v : c) v = rng.uniform(-bound, bound);
  return c;
}

double rms(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s / static_cast<double>(x.size()));
}

RegTree scalar(double mean, std::optional<double> voiced = std::nullopt) {
  return RegTree::constant(RegLeaf{{mean}, {0.0}, voiced, 1});
}

VoiceModel constant_voice(double frames, bool voiced, int order = 24) {
  VoiceModel v;
  v.order = order;
  v.duration = scalar(frames);
  v.lf0 = scalar(std::log(100.0), voiced ? 1.0 : 0.0);
  v.mgc = RegTree::constant(RegLeaf{std::vector<double>(order + 1, 0.0),
                                    std::vector<double>(order + 1, 0.0), std::nullopt, 1});
  return v;
}

std::vector<std::vector<std::string>> one_phone(const std::string& phone) {
  std::vector<std::vector<std::string>> labels;
  for (int k = 1; k <= 5; ++k) labels.push_back({"P0=" + phone, "S=" + std::to_string(k)});
  return labels;
}

// "Mamă !" with hand annotation, as state-level labels.
std::vector<ttsfront::ContextLabel> mama_labels() {
  textpipe::Sentence s;
  s.id = "g1";
  textpipe::Token w;
  w.wordform = "Mamă";
  w.transcription = {"m", "a", "m", "@"};
  w.syllables = {{0, 2}, {2, 4}};
  w.stress = 0;
  w.pos = "Nc";
  w.chunk = "B-NP";
  textpipe::Token p;
  p.wordform = "!";
  p.pos = "PUNCT";
  p.chunk = "O";
  s.tokens = {w, p};
  ttsfront::LabelOptions opt;
  opt.state_level = true;
  return ttsfront::build_labels(s, {}, ttsfront::ArticulatoryMap::defaults(), opt);
}

}  // namespace

TEST_CASE("Padé coefficients follow the closed form") {
  // A_l = (2L-l)! L! / ((2L)! l! (L-l)!)
  auto fact = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int l = 0; l <= kPadeOrder; ++l) {
    const double a = fact(2 * kPadeOrder - l) * fact(kPadeOrder) /
                     (fact(2 * kPadeOrder) * fact(l) * fact(kPadeOrder - l));
    CHECK(kPade[l] == doctest::Approx(a).epsilon(1e-15));
  }
}

TEST_CASE("mc2b recursion") {
  const auto b = mc2b(std::vector<double>{0.5, 0.2, -0.1}, 0.4);
  CHECK(b[2] == doctest::Approx(-0.1));
  CHECK(b[1] == doctest::Approx(0.2 + 0.04));
  CHECK(b[0] == doctest::Approx(0.5 - 0.4 * 0.24));
}

TEST_CASE("zero cepstrum passes the excitation through") {
  Rng rng(7);
  std::vector<double> x(800);
  for (auto& v : x) v = rng.normal();
  const std::vector<std::vector<double>> mgc(10, std::vector<double>(25, 0.0));
  const auto y = mlsa_filter(x, mgc, 0.42, 24);
  REQUIRE(y.size() == x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("magnitude response matches the exact warped exponential") {
  Rng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const auto c = random_cepstrum(rng, 24, 0.2);
    CHECK(max_db_error(c, 0.42) < 1.0);
  }
}

TEST_CASE("Padé error shrinks with the cepstrum magnitude") {
  Rng rng(99);
  const auto base = random_cepstrum(rng, 24, 1.0);
  double previous = 1e9;
  for (double scale : {0.2, 0.1, 0.05}) {
    auto c = base;
    for (auto& v : c) v *= scale;
    const double e = max_db_error(c, 0.42);
    CHECK(e < previous);
    previous = e;
  }
}

TEST_CASE("adding log 2 to c(0) doubles the output") {
  Rng rng(5);
  std::vector<double> x(400);
  for (auto& v : x) v = rng.normal();
  std::vector<std::vector<double>> mgc(5, random_cepstrum(rng, 24, 0.2));
  const auto y1 = mlsa_filter(x, mgc, 0.42, 24);
  for (auto& row : mgc) row[0] += std::numbers::ln2;
  const auto y2 = mlsa_filter(x, mgc, 0.42, 24);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(y2[i] == doctest::Approx(2.0 * y1[i]).epsilon(1e-12));
}

TEST_CASE("property: raising c(0) never lowers the RMS") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(320);
    for (auto& v : x) v = rng.normal();
    auto mgc = std::vector<std::vector<double>>(4, random_cepstrum(rng, 24, 0.3));
    double prev = 0.0;
    for (int step = 0; step < 5; ++step) {
      const double r = rms(mlsa_filter(x, mgc, 0.42, 24));
      CHECK(r >= prev);
      prev = r;
      for (auto& row : mgc) row[0] += rng.uniform(0.0, 0.5);
    }
  }
}

TEST_CASE("property: bounded cepstra stay stable over 10 seconds") {
  Rng rng(3);
  const std::size_t frames = 2000;  // 10 s at 5 ms
  std::vector<std::vector<double>> mgc;
  for (std::size_t f = 0; f < frames; ++f) mgc.push_back(random_cepstrum(rng, 24, 1.0));
  std::vector<double> x(frames * 80);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  const auto y = mlsa_filter(x, mgc, 0.42, 24);
  bool finite = true;
  for (double v : y) finite = finite && std::isfinite(v);
  CHECK(finite);
}

TEST_CASE("mlsa_filter argument errors") {
  const std::vector<double> x(160, 0.0);
  CHECK(err([&] { mlsa_filter(x, std::vector<std::vector<double>>(2, std::vector<double>(10)), 0.42, 24); }) ==
        "E_DIM_MISMATCH");
  CHECK(err([&] { mlsa_filter(x, std::vector<std::vector<double>>(3, std::vector<double>(25)), 0.42, 24); }) ==
        "E_DIM_MISMATCH");
}

TEST_CASE("predict_streams: constant voice, 4 frames per state") {
  const auto labels = one_phone("a");
  const auto track = predict_streams(constant_voice(4.0, true), labels);
  CHECK(track.frames() == 20);
  CHECK(track.state_durations == std::vector<int>(5, 4));
  for (const auto& l : track.lf0) CHECK(l.has_value());
  const auto silent = predict_streams(constant_voice(4.0, false), labels);
  for (const auto& l : silent.lf0) CHECK_FALSE(l.has_value());
}

TEST_CASE("predict_streams: durations round and floor at one frame") {
  CHECK(predict_streams(constant_voice(0.2, false), one_phone("a")).frames() == 5);
  CHECK(predict_streams(constant_voice(2.5, false), one_phone("a")).frames() == 15);
}

TEST_CASE("predict_streams: lf0 interpolates inside a voiced run") {
  std::vector<RegExample> f0{{{"S=1"}, {4.0}, true}, {{"S=2"}, {5.0}, true}};
  learners::RegTreeParams p;
  p.min_occupancy = 1;
  auto voice = constant_voice(2.0, true);
  voice.lf0 = RegTree::train(f0, p);
  const std::vector<std::vector<std::string>> labels{{"S=1"}, {"S=2"}};
  const auto track = predict_streams(voice, labels);
  REQUIRE(track.frames() == 4);
  const double want[] = {4.0, 4.0 + 1.0 / 3.0, 4.0 + 2.0 / 3.0, 5.0};
  for (int i = 0; i < 4; ++i) CHECK(*track.lf0[i] == doctest::Approx(want[i]));
}

TEST_CASE("predict_streams: interpolation does not cross an unvoiced state") {
  std::vector<RegExample> f0{{{"S=1"}, {4.0}, true}, {{"S=2"}, {0.0}, false}, {{"S=3"}, {6.0}, true}};
  learners::RegTreeParams p;
  p.min_occupancy = 1;
  auto voice = constant_voice(3.0, true);
  voice.lf0 = RegTree::train(f0, p);
  const std::vector<std::vector<std::string>> labels{{"S=1"}, {"S=2"}, {"S=3"}};
  const auto track = predict_streams(voice, labels);
  REQUIRE(track.frames() == 9);
  for (int i = 0; i < 3; ++i) CHECK(*track.lf0[i] == doctest::Approx(4.0));
  for (int i = 3; i < 6; ++i) CHECK_FALSE(track.lf0[i].has_value());
  for (int i = 6; i < 9; ++i) CHECK(*track.lf0[i] == doctest::Approx(6.0));
}

TEST_CASE("predict_streams rejects phone-level labels") {
  const std::vector<std::vector<std::string>> labels{{"P0=a"}};
  CHECK(err([&] { predict_streams(constant_voice(4.0, true), labels); }) == "E_LABEL_MODE");
}

TEST_CASE("property: frame count equals the sum of rounded durations") {
  const auto voice = toy_voice();
  const auto labels = mama_labels();
  const auto track = predict_streams(voice, labels);
  int sum = 0;
  for (int d : track.state_durations) {
    CHECK(d >= 1);
    sum += d;
  }
  CHECK(track.frames() == static_cast<std::size_t>(sum));
  CHECK(track.state_durations.size() == labels.size());
  for (const auto& row : track.mgc) CHECK(row.size() == 25);
}

TEST_CASE("excitation: pulse spacing, noise, determinism") {
  ParameterTrack voiced;
  for (int f = 0; f < 10; ++f) {
    voiced.mgc.emplace_back(25, 0.0);
    voiced.lf0.emplace_back(std::log(100.0));
  }
  const auto e = generate_excitation(voiced, 16000, 5.0, 1);
  REQUIRE(e.size() == 800);
  std::vector<std::size_t> pulses;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0.0) pulses.push_back(i);
  }
  REQUIRE(pulses.size() == 5);
  for (std::size_t i = 0; i < pulses.size(); ++i) CHECK(pulses[i] == 160 * i);

  ParameterTrack unvoiced;
  for (int f = 0; f < 10; ++f) {
    unvoiced.mgc.emplace_back(25, 0.0);
    unvoiced.lf0.emplace_back(std::nullopt);
  }
  const auto n = generate_excitation(unvoiced, 16000, 5.0, 42);
  REQUIRE(n.size() == 800);
  double mean = 0.0;
  for (double v : n) mean += v;
  mean /= 800.0;
  CHECK(std::abs(mean) < 0.2);
  CHECK(n == generate_excitation(unvoiced, 16000, 5.0, 42));
  CHECK(n != generate_excitation(unvoiced, 16000, 5.0, 43));
}

TEST_CASE("excitation: phase carries across frames") {
  ParameterTrack t;
  for (int f = 0; f < 4; ++f) {
    t.mgc.emplace_back(25, 0.0);
    t.lf0.emplace_back(std::log(16000.0 / 120.0));  // 120-sample period, 80-sample frames
  }
  const auto e = generate_excitation(t, 16000, 5.0, 1);
  std::vector<std::size_t> pulses;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0.0) pulses.push_back(i);
  }
  CHECK(pulses == std::vector<std::size_t>{0, 120, 240});
}

TEST_CASE("excitation errors") {
  ParameterTrack t;
  t.mgc.emplace_back(25, 0.0);
  t.lf0.emplace_back(-std::numeric_limits<double>::infinity());
  CHECK(err([&] { generate_excitation(t, 16000, 5.0, 1); }) == "E_BAD_F0");
  t.lf0[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK(err([&] { generate_excitation(t, 16000, 5.0, 1); }) == "E_BAD_F0");
  t.lf0[0] = std::log(100.0);
  CHECK(err([&] { generate_excitation(t, 16000, 5.03, 1); }) == "E_INVALID_ARGUMENT");
}

TEST_CASE("pcm16 scaling and WAV round trip") {
  const std::vector<double> x{0.0, 0.5, -1.0, 0.25};
  const auto pcm = to_pcm16(x);
  CHECK(pcm == std::vector<std::int16_t>{0, 14745, -29490, 7373});
  CHECK(to_pcm16(std::vector<double>(3, 0.0)) == std::vector<std::int16_t>(3, 0));
  const Waveform w{16000, pcm};
  const auto bytes = wav_bytes(w);
  CHECK(bytes.size() == 44 + 8);
  const auto back = parse_wav(bytes);
  CHECK(back.sample_rate == 16000);
  CHECK(back.samples == pcm);
  auto broken = bytes;
  broken[0] = 'X';
  CHECK(err([&] { parse_wav(broken); }) == "E_INVALID_ARGUMENT");
}

TEST_CASE("synthesize: sample count and determinism") {
  const auto voice = constant_voice(4.0, true);
  const auto labels = one_phone("a");
  const auto wav = synthesize(voice, labels, 9);
  const auto w = parse_wav(wav);
  CHECK(w.sample_rate == 16000);
  CHECK(w.samples.size() == 1600);
  CHECK(wav == synthesize(voice, labels, 9));
}

TEST_CASE("synthesize: golden toy-voice utterance") {
  const auto voice = toy_voice();
  std::vector<std::vector<std::string>> labels;
  for (const auto& l : mama_labels()) labels.push_back(label_tokens(l));
  const auto wav = synthesize(voice, labels, 2024);
  const auto track = predict_streams(voice, labels);
  CHECK(parse_wav(wav).samples.size() == track.frames() * 80);
  const auto path = std::string(LSK_FIXTURES) + "/synth_golden.wav";
  if (std::getenv("LSK_UPDATE_GOLDEN")) write_binary_file(path, wav);
  CHECK(wav == read_binary_file(path));
}

TEST_CASE("voice file round trip") {
  const auto voice = toy_voice();
  const auto bytes = voice.to_bytes();
  const auto back = VoiceModel::from_bytes(bytes);
  CHECK(back.to_bytes() == bytes);
  const auto labels = mama_labels();
  const auto a = predict_streams(voice, labels);
  const auto b = predict_streams(back, labels);
  CHECK(a.mgc == b.mgc);
  CHECK(a.lf0 == b.lf0);
  auto cut = bytes;
  cut.resize(cut.size() - 3);
  CHECK_FALSE(err([&] { VoiceModel::from_bytes(cut); }).empty());
}

TEST_CASE("voice validation") {
  auto v = constant_voice(4.0, true);
  v.alpha = 1.0;
  CHECK(err([&] { v.validate(); }) == "E_MODEL_FORMAT");
  v = constant_voice(4.0, true);
  v.order = 12;
  CHECK(err([&] { v.validate(); }) == "E_DIM_MISMATCH");
  v = constant_voice(4.0, true);
  v.frame_shift_ms = 0.0;
  CHECK(err([&] { v.validate(); }) == "E_MODEL_FORMAT");
}
