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

#include "lsk/ttsback/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "lsk/common/error.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/ttsback/mlsa.hpp"

namespace lsk::ttsback {

std::vector<double> generate_excitation(const ParameterTrack& track, std::uint32_t sample_rate,
                                        double frame_shift_ms, std::uint64_t seed) {
  const double spf = frame_shift_ms * sample_rate / 1000.0;
  if (!(spf >= 1.0) || std::abs(spf - std::round(spf)) > 1e-9) {
    throw Error(Errc::kInvalidArgument, "frame shift is not a whole number of samples");
  }
  const auto period_samples = static_cast<std::size_t>(std::llround(spf));
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(track.frames() * period_samples);
  long countdown = 0;  // samples until the next pulse
  for (std::size_t f = 0; f < track.frames(); ++f) {
    const auto& lf0 = track.lf0[f];
    if (!lf0) {
      for (std::size_t n = 0; n < period_samples; ++n) out.push_back(rng.normal());
      countdown = 0;
      continue;
    }
    const double f0 = std::exp(*lf0);
    if (!(f0 > 0.0) || !std::isfinite(f0)) {
      throw Error(Errc::kBadF0, "frame " + std::to_string(f) + " is voiced with F0 " +
                                    std::to_string(f0));
    }
    const long period = std::max(1L, std::lround(sample_rate / f0));
    for (std::size_t n = 0; n < period_samples; ++n) {
      if (countdown <= 0) {
        out.push_back(1.0);
        countdown = period;
      } else {
        out.push_back(0.0);
      }
      --countdown;
    }
  }
  return out;
}

std::vector<double> MlsaVocoder::render(std::span<const double> excitation,
                                        const ParameterTrack& track,
                                        const VoiceModel& voice) const {
  return mlsa_filter(excitation, track.mgc, voice.alpha, voice.order);
}

std::vector<std::int16_t> to_pcm16(std::span<const double> signal, double peak) {
  double top = 0.0;
  for (double x : signal) top = std::max(top, std::abs(x));
  std::vector<std::int16_t> out(signal.size(), 0);
  if (top == 0.0 || !std::isfinite(top)) return out;
  const double scale = peak * 32767.0 / top;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const long v = std::lround(signal[i] * scale);
    out[i] = static_cast<std::int16_t>(std::clamp(v, -32768L, 32767L));
  }
  return out;
}

namespace {

void tag(ByteWriter& w, const char* four) { w.raw(std::string_view(four, 4)); }

}  // namespace

Bytes wav_bytes(const Waveform& wav) {
  const auto data_bytes = static_cast<std::uint32_t>(wav.samples.size() * 2);
  ByteWriter w;
  tag(w, "RIFF");
  w.u32(36 + data_bytes);
  tag(w, "WAVE");
  tag(w, "fmt ");
  w.u32(16);
  w.u8(1), w.u8(0);  // PCM
  w.u8(1), w.u8(0);  // mono
  w.u32(wav.sample_rate);
  w.u32(wav.sample_rate * 2);
  w.u8(2), w.u8(0);   // block align
  w.u8(16), w.u8(0);  // bits per sample
  tag(w, "data");
  w.u32(data_bytes);
  for (auto s : wav.samples) {
    const auto u = static_cast<std::uint16_t>(s);
    w.u8(static_cast<std::uint8_t>(u & 0xFF));
    w.u8(static_cast<std::uint8_t>(u >> 8));
  }
  return std::move(w).take();
}

Waveform parse_wav(std::span<const std::uint8_t> bytes) {
  auto fail = [](const char* what) -> Waveform {
    throw Error(Errc::kInvalidArgument, std::string("not a 16-bit mono PCM WAV: ") + what);
  };
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVEfmt ", 8) != 0 ||
      std::memcmp(bytes.data() + 36, "data", 4) != 0) {
    return fail("bad header");
  }
  auto le16 = [&](std::size_t at) { return bytes[at] | (bytes[at + 1] << 8); };
  auto le32 = [&](std::size_t at) {
    return static_cast<std::uint32_t>(le16(at)) | (static_cast<std::uint32_t>(le16(at + 2)) << 16);
  };
  if (le32(16) != 16 || le16(20) != 1 || le16(22) != 1 || le16(34) != 16) return fail("format");
  const auto n = le32(40);
  if (n % 2 != 0 || 44 + static_cast<std::size_t>(n) != bytes.size()) return fail("data size");
  Waveform w;
  w.sample_rate = le32(24);
  w.samples.resize(n / 2);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    w.samples[i] = static_cast<std::int16_t>(static_cast<std::uint16_t>(le16(44 + 2 * i)));
  }
  return w;
}

Bytes synthesize(const VoiceModel& voice, std::span<const std::vector<std::string>> labels,
                 std::uint64_t seed, const Vocoder& vocoder) {
  voice.validate();
  const auto track = predict_streams(voice, labels);
  const auto excitation = generate_excitation(track, voice.sample_rate, voice.frame_shift_ms, seed);
  const auto speech = vocoder.render(excitation, track, voice);
  return wav_bytes(Waveform{voice.sample_rate, to_pcm16(speech)});
}

}  // namespace lsk::ttsback
