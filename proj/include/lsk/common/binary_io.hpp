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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsk {

using Bytes = std::vector<std::uint8_t>;

// Little-endian encoder used by the FLMD model container and FLIX snapshots.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v);
  void str(std::string_view s);
  void raw(std::span<const std::uint8_t> bytes);
  void raw(std::string_view bytes);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

// Decoder that reports E_MODEL_FORMAT with the absolute byte offset of the
// first malformed field. `base` is the offset of this view inside the file.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data, std::size_t base = 0)
      : data_(data), base_(base) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64();
  std::string str();
  std::span<const std::uint8_t> raw(std::size_t n);
  // Count prefix guarded against absurd values relative to the bytes left.
  std::uint32_t count(std::size_t min_element_bytes = 1);

  std::size_t offset() const { return base_ + pos_; }
  bool at_end() const { return pos_ == data_.size(); }
  void expect_end() const;
  [[noreturn]] void fail(std::string_view what) const;

 private:
  void need(std::size_t n) const;

  std::span<const std::uint8_t> data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// FLMD container: magic "FLMD", version byte, kind byte, u32 section count,
// then each section as u32 length + payload.
inline constexpr std::uint8_t kContainerVersion = 1;

struct Section {
  std::size_t offset = 0;  // absolute offset of the payload in the file
  std::span<const std::uint8_t> payload;
  ByteReader reader() const { return ByteReader(payload, offset); }
};

struct Container {
  char kind = 0;
  std::vector<Section> sections;
};

Bytes write_container(char kind, const std::vector<Bytes>& sections);
// The returned spans alias `file`.
Container read_container(std::span<const std::uint8_t> file, char expected_kind);

Bytes read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, std::span<const std::uint8_t> bytes);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace lsk
