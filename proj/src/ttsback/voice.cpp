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

#include "lsk/ttsback/voice.hpp"

#include <cmath>

#include "lsk/common/error.hpp"
#include "lsk/common/phones.hpp"

namespace lsk::ttsback {

using learners::RegExample;
using learners::RegTree;

std::size_t VoiceModel::samples_per_frame() const {
  return static_cast<std::size_t>(std::llround(frame_shift_ms * sample_rate / 1000.0));
}

void VoiceModel::validate() const {
  auto bad = [](const std::string& what) { throw Error(Errc::kModelFormat, "voice: " + what); };
  if (sample_rate == 0) bad("sample rate must be positive");
  if (!(frame_shift_ms > 0.0)) bad("frame shift must be positive");
  const double spf = frame_shift_ms * sample_rate / 1000.0;
  if (std::abs(spf - std::round(spf)) > 1e-9 || std::round(spf) < 1.0) {
    bad("frame shift is not a whole number of samples");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) bad("alpha outside (0,1)");
  if (order < 1) bad("cepstral order must be at least 1");
  if (states < 1) bad("state count must be positive");
  auto dims = [](const RegTree& t, std::size_t want, bool voicing, const char* name) {
    if (t.dimension() != want || t.has_voicing() != voicing || t.leaf_count() == 0) {
      throw Error(Errc::kDimMismatch, std::string("voice: ") + name + " tree has dimension " +
                                          std::to_string(t.dimension()) + ", expected " +
                                          std::to_string(want));
    }
  };
  dims(duration, 1, false, "duration");
  dims(lf0, 1, true, "lf0");
  dims(mgc, static_cast<std::size_t>(order) + 1, false, "mgc");
}

Bytes VoiceModel::to_bytes() const {
  validate();
  ByteWriter h;
  h.u32(sample_rate);
  h.f64(frame_shift_ms);
  h.f64(alpha);
  h.u32(static_cast<std::uint32_t>(order));
  h.u32(static_cast<std::uint32_t>(states));
  std::vector<Bytes> sections;
  sections.push_back(std::move(h).take());
  for (const auto* t : {&duration, &lf0, &mgc}) {
    ByteWriter w;
    t->write(w);
    sections.push_back(std::move(w).take());
  }
  return write_container('V', sections);
}

VoiceModel VoiceModel::from_bytes(std::span<const std::uint8_t> file) {
  const auto c = read_container(file, 'V');
  if (c.sections.size() != 4) {
    throw Error(Errc::kModelFormat, "voice needs 4 sections, found " +
                                        std::to_string(c.sections.size()));
  }
  VoiceModel v;
  auto h = c.sections[0].reader();
  v.sample_rate = h.u32();
  v.frame_shift_ms = h.f64();
  v.alpha = h.f64();
  v.order = static_cast<int>(h.u32());
  v.states = static_cast<int>(h.u32());
  h.expect_end();
  RegTree* trees[] = {&v.duration, &v.lf0, &v.mgc};
  for (int k = 0; k < 3; ++k) {
    auto r = c.sections[k + 1].reader();
    *trees[k] = RegTree::read(r);
    r.expect_end();
  }
  v.validate();
  return v;
}

void VoiceModel::save(const std::string& path) const { write_binary_file(path, to_bytes()); }

VoiceModel VoiceModel::load(const std::string& path) { return from_bytes(read_binary_file(path)); }

VoiceModel toy_voice(int order) {
  std::vector<RegExample> dur, f0, spec;
  for (const auto& p : phones::default_inventory()) {
    const auto a = phones::articulation(p);
    const bool sil = a.cls == "sil";
    const bool vowel = a.cls == "vow";
    const bool voiced = !sil && (vowel || a.voicing == "voiced");
    const bool fricative = a.manner == "fricative" || a.manner == "affricate";
    for (int k = 1; k <= 5; ++k) {
      const auto bag = learners::make_bag({"P0=" + p, "P0cls=" + std::string(a.cls),
                                           "P0mn=" + std::string(a.manner),
                                           "P0vc=" + std::string(a.voicing),
                                           "S=" + std::to_string(k)});
      const double frames = sil ? 8.0 : vowel ? 6.0 : 3.0;
      dur.push_back({bag, {frames}, std::nullopt});
      f0.push_back({bag, {std::log(110.0 + 4.0 * k)}, voiced});
      std::vector<double> c(order + 1, 0.0);
      c[0] = sil ? -5.0 : vowel ? 0.0 : -1.0;
      for (int m = 1; m <= order; ++m) {
        const double decay = 1.0 / m;
        if (vowel) c[m] = (m % 2 ? 0.6 : -0.2) * decay;
        else if (fricative) c[m] = (m == 1 ? -0.5 : 0.1) * decay;
        else if (!sil) c[m] = 0.3 * decay;
      }
      spec.push_back({bag, std::move(c), std::nullopt});
    }
  }
  learners::RegTreeParams params;
  params.min_occupancy = 1;
  params.min_gain = 1e-9;
  VoiceModel v;
  v.order = order;
  v.duration = RegTree::train(dur, params);
  v.lf0 = RegTree::train(f0, params);
  v.mgc = RegTree::train(spec, params);
  v.validate();
  return v;
}

std::vector<std::string> label_tokens(const ttsfront::ContextLabel& label) {
  auto t = label.features;
  if (label.state > 0) t.push_back("S=" + std::to_string(label.state));
  return t;
}

ParameterTrack predict_streams(const VoiceModel& voice,
                               std::span<const std::vector<std::string>> labels) {
  struct State {
    std::size_t start;
    int frames;
    std::optional<double> lf0;
  };
  ParameterTrack track;
  std::vector<State> states;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool has_state = false;
    for (const auto& t : labels[i]) has_state |= t.rfind("S=", 0) == 0;
    if (!has_state) {
      throw Error(Errc::kLabelMode, "label " + std::to_string(i + 1) +
                                        " has no state index; synthesis needs state-level labels");
    }
    const auto bag = learners::make_bag(labels[i]);
    const auto& d = voice.duration.predict(bag);
    const int frames = static_cast<int>(std::lround(std::max(1.0, d.mean[0])));
    const auto& p = voice.lf0.predict(bag);
    const bool voiced = p.voiced_fraction.value_or(0.0) > 0.5;
    const auto& s = voice.mgc.predict(bag);
    states.push_back({track.mgc.size(), frames, voiced ? std::optional(p.mean[0]) : std::nullopt});
    track.state_durations.push_back(frames);
    for (int f = 0; f < frames; ++f) {
      track.mgc.push_back(s.mean);
      track.lf0.push_back(states.back().lf0);
    }
  }

  // Linear lf0 across each voiced run: the first state anchors at the run's
  // first frame, the last at its last frame, the others at their centres.
  for (std::size_t a = 0; a < states.size();) {
    if (!states[a].lf0) {
      ++a;
      continue;
    }
    std::size_t b = a;
    while (b + 1 < states.size() && states[b + 1].lf0) ++b;
    if (b > a) {
      std::vector<std::pair<double, double>> anchors;  // (frame, value)
      for (std::size_t k = a; k <= b; ++k) {
        double at = states[k].start + (states[k].frames - 1) / 2.0;
        if (k == a) at = static_cast<double>(states[k].start);
        if (k == b) at = static_cast<double>(states[k].start + states[k].frames - 1);
        anchors.emplace_back(at, *states[k].lf0);
      }
      const std::size_t first = states[a].start;
      const std::size_t last = states[b].start + states[b].frames - 1;
      std::size_t seg = 0;
      for (std::size_t f = first; f <= last; ++f) {
        while (seg + 2 < anchors.size() && static_cast<double>(f) > anchors[seg + 1].first) ++seg;
        const auto [x0, y0] = anchors[seg];
        const auto [x1, y1] = anchors[seg + 1];
        const double w = x1 > x0 ? (static_cast<double>(f) - x0) / (x1 - x0) : 0.0;
        track.lf0[f] = y0 + w * (y1 - y0);
      }
    }
    a = b + 1;
  }
  return track;
}

ParameterTrack predict_streams(const VoiceModel& voice,
                               std::span<const ttsfront::ContextLabel> labels) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(labels.size());
  for (const auto& l : labels) tokens.push_back(label_tokens(l));
  return predict_streams(voice, tokens);
}

}  // namespace lsk::ttsback
