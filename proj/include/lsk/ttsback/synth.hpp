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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/ttsback/voice.hpp"

namespace lsk::ttsback {

// Pulse train on voiced frames (one unit pulse every round(rate / f0)
// samples, phase carried across frames), seeded Gaussian noise on unvoiced
// frames. Throws E_BAD_F0 for a non-positive or non-finite F0.
std::vector<double> generate_excitation(const ParameterTrack& track, std::uint32_t sample_rate,
                                        double frame_shift_ms, std::uint64_t seed);

// Waveform renderer behind synthesize(); MLSA is the only one shipped.
class Vocoder {
 public:
  virtual ~Vocoder() = default;
  virtual std::vector<double> render(std::span<const double> excitation,
                                     const ParameterTrack& track, const VoiceModel& voice) const = 0;
};

class MlsaVocoder final : public Vocoder {
 public:
  std::vector<double> render(std::span<const double> excitation, const ParameterTrack& track,
                             const VoiceModel& voice) const override;
};

struct Waveform {
  std::uint32_t sample_rate = 0;
  std::vector<std::int16_t> samples;
};

// Scales so the largest magnitude is `peak` of full scale and quantizes.
std::vector<std::int16_t> to_pcm16(std::span<const double> signal, double peak = 0.9);
// RIFF/WAVE, PCM 16-bit mono, fmt and data chunks only.
Bytes wav_bytes(const Waveform& w);
// Reads what wav_bytes writes; E_INVALID_ARGUMENT otherwise.
Waveform parse_wav(std::span<const std::uint8_t> bytes);

Bytes synthesize(const VoiceModel& voice, std::span<const std::vector<std::string>> labels,
                 std::uint64_t seed, const Vocoder& vocoder = MlsaVocoder());

}  // namespace lsk::ttsback
