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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsk/common/binary_io.hpp"
#include "lsk/learners/reg_tree.hpp"
#include "lsk/ttsfront/labels.hpp"

namespace lsk::ttsback {

struct VoiceModel {
  learners::RegTree duration;  // frames per state, 1-dimensional
  learners::RegTree lf0;       // log-F0, 1-dimensional, with voicing
  learners::RegTree mgc;       // mel-cepstrum c(0..order)
  std::uint32_t sample_rate = 16000;
  double frame_shift_ms = 5.0;
  double alpha = 0.42;
  int order = 24;
  int states = 5;

  std::size_t samples_per_frame() const;
  // Throws E_MODEL_FORMAT (or E_DIM_MISMATCH for tree dimensions).
  void validate() const;

  Bytes to_bytes() const;
  static VoiceModel from_bytes(std::span<const std::uint8_t> file);
  void save(const std::string& path) const;
  static VoiceModel load(const std::string& path);
};

// Small voice grown from rules over the default inventory: vowels and voiced
// consonants are voiced, silences are long and quiet. Deterministic.
VoiceModel toy_voice(int order = 24);

struct ParameterTrack {
  std::vector<std::vector<double>> mgc;  // per frame, order + 1 values
  std::vector<std::optional<double>> lf0;  // unset = unvoiced
  std::vector<int> state_durations;        // frames per input label

  std::size_t frames() const { return mgc.size(); }
};

// Labels are feature-token lists in state mode (each carries an S=k token);
// anything else is E_LABEL_MODE.
ParameterTrack predict_streams(const VoiceModel& voice,
                               std::span<const std::vector<std::string>> labels);
ParameterTrack predict_streams(const VoiceModel& voice,
                               std::span<const ttsfront::ContextLabel> labels);

// Feature tokens of a rendered label (including S=k in state mode).
std::vector<std::string> label_tokens(const ttsfront::ContextLabel& label);

}  // namespace lsk::ttsback
