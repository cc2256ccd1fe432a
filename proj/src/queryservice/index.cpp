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

#include "lsk/queryservice/index.hpp"

#include <algorithm>
#include <cstring>

#include "lsk/common/error.hpp"
#include "lsk/common/ids.hpp"
#include "lsk/common/utf8.hpp"

namespace lsk::queryservice {

namespace {

constexpr char kMagic[4] = {'F', 'L', 'I', 'X'};
constexpr std::uint32_t kSnapshotVersion = 1;

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

IndexedCorpus IndexedCorpus::build(std::vector<CorpusUtterance> utterances, std::string name,
                                   std::string audio_base) {
  IndexedCorpus c;
  c.name_ = std::move(name);
  c.audio_base_ = std::move(audio_base);
  std::stable_sort(utterances.begin(), utterances.end(),
                   [](const auto& a, const auto& b) { return natural_less(a.id, b.id); });
  for (std::size_t i = 1; i < utterances.size(); ++i) {
    if (utterances[i].id == utterances[i - 1].id) {
      throw Error(Errc::kDupId, "utterance id '" + utterances[i].id + "' appears twice");
    }
  }
  c.utterances_ = std::move(utterances);
  for (std::size_t u = 0; u < c.utterances_.size(); ++u) {
    const auto& toks = c.utterances_[u].tokens;
    for (std::size_t t = 0; t < toks.size(); ++t) {
      const Position p{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(t)};
      c.words_[utf8::casefold(toks[t].word)].push_back(p);
      c.lemmas_[utf8::casefold(toks[t].lemma)].push_back(p);
      c.pos_[toks[t].pos].push_back(p);
    }
  }
  return c;
}

const CorpusUtterance* IndexedCorpus::find(std::string_view id) const {
  const auto it = std::lower_bound(
      utterances_.begin(), utterances_.end(), id,
      [](const CorpusUtterance& u, std::string_view key) { return natural_less(u.id, std::string(key)); });
  return it != utterances_.end() && it->id == id ? &*it : nullptr;
}

std::size_t IndexedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& u : utterances_) n += u.tokens.size();
  return n;
}

Bytes IndexedCorpus::snapshot() const {
  ByteWriter w;
  w.raw(std::string_view(kMagic, 4));
  w.u32(kSnapshotVersion);
  w.str(name_);
  w.str(audio_base_);
  w.u32(static_cast<std::uint32_t>(utterances_.size()));
  for (const auto& u : utterances_) {
    w.str(u.id);
    w.str(u.group);
    w.str(u.audio_file);
    w.i64(u.audio_offset_ms);
    w.u32(static_cast<std::uint32_t>(u.tokens.size()));
    for (const auto& t : u.tokens) {
      w.str(t.word);
      w.str(t.lemma);
      w.str(t.pos);
      w.u8(t.span ? 1 : 0);
      if (t.span) {
        w.i64(t.span->start_ms);
        w.i64(t.span->end_ms);
      }
    }
  }
  auto bytes = std::move(w).take();
  const auto h = fnv1a(bytes);
  for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(h >> (8 * i)));
  return bytes;
}

IndexedCorpus IndexedCorpus::from_snapshot(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(Errc::kModelFormat, "not an index snapshot (missing FLIX magic)");
  }
  const auto body = bytes.first(bytes.size() - 8);
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i) stored |= static_cast<std::uint64_t>(bytes[body.size() + i]) << (8 * i);
  if (stored != fnv1a(body)) throw Error(Errc::kModelFormat, "index snapshot checksum mismatch");
  ByteReader r(body.subspan(4), 4);
  const auto version = r.u32();
  if (version != kSnapshotVersion) r.fail("unsupported snapshot version " + std::to_string(version));
  const auto name = r.str();
  const auto base = r.str();
  std::vector<CorpusUtterance> utts(r.count(24));
  for (auto& u : utts) {
    u.id = r.str();
    u.group = r.str();
    u.audio_file = r.str();
    u.audio_offset_ms = r.i64();
    u.tokens.resize(r.count(13));
    for (auto& t : u.tokens) {
      t.word = r.str();
      t.lemma = r.str();
      t.pos = r.str();
      const auto has = r.u8();
      if (has > 1) r.fail("bad span flag");
      if (has) {
        aligner::TimeSpan s;
        s.start_ms = r.i64();
        s.end_ms = r.i64();
        t.span = s;
      }
    }
  }
  r.expect_end();
  try {
    return build(std::move(utts), name, base);
  } catch (const Error& e) {
    throw Error(Errc::kModelFormat, "index snapshot: " + e.detail());
  }
}

void IndexedCorpus::save(const std::string& path) const { write_binary_file(path, snapshot()); }

IndexedCorpus IndexedCorpus::load(const std::string& path) {
  return from_snapshot(read_binary_file(path));
}

std::uint64_t IndexedCorpus::fingerprint() const { return fnv1a(snapshot()); }

}  // namespace lsk::queryservice
