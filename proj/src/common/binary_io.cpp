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

#include "lsk/common/binary_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lsk/common/error.hpp"

namespace lsk {

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::str(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  raw(s);
}

void ByteWriter::raw(std::span<const std::uint8_t> bytes) {
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

void ByteWriter::raw(std::string_view bytes) {
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

void ByteReader::fail(std::string_view what) const {
  throw Error(Errc::kModelFormat,
              std::string(what) + " at byte offset " + std::to_string(offset()));
}

void ByteReader::need(std::size_t n) const {
  if (data_.size() - pos_ < n) fail("unexpected end of data");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

std::string ByteReader::str() {
  const auto n = u32();
  auto bytes = raw(n);
  return std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint32_t ByteReader::count(std::size_t min_element_bytes) {
  const auto at = offset();
  const auto n = u32();
  const auto left = data_.size() - pos_;
  if (min_element_bytes > 0 && n > left / min_element_bytes) {
    throw Error(Errc::kModelFormat,
                "implausible element count " + std::to_string(n) + " at byte offset " +
                    std::to_string(at));
  }
  return n;
}

void ByteReader::expect_end() const {
  if (!at_end()) fail("trailing bytes");
}

Bytes write_container(char kind, const std::vector<Bytes>& sections) {
  ByteWriter w;
  w.raw(std::string_view("FLMD"));
  w.u8(kContainerVersion);
  w.u8(static_cast<std::uint8_t>(kind));
  w.u32(static_cast<std::uint32_t>(sections.size()));
  for (const auto& s : sections) {
    w.u32(static_cast<std::uint32_t>(s.size()));
    w.raw(s);
  }
  return std::move(w).take();
}

Container read_container(std::span<const std::uint8_t> file, char expected_kind) {
  ByteReader r(file);
  auto magic = r.raw(4);
  if (std::memcmp(magic.data(), "FLMD", 4) != 0) {
    throw Error(Errc::kModelFormat, "bad magic at byte offset 0");
  }
  const auto version_at = r.offset();
  if (r.u8() != kContainerVersion) {
    throw Error(Errc::kModelFormat,
                "unsupported version at byte offset " + std::to_string(version_at));
  }
  const auto kind_at = r.offset();
  Container c;
  c.kind = static_cast<char>(r.u8());
  if (expected_kind != 0 && c.kind != expected_kind) {
    throw Error(Errc::kModelFormat, std::string("model kind '") + c.kind + "' where '" +
                                        expected_kind + "' expected at byte offset " +
                                        std::to_string(kind_at));
  }
  const auto n = r.count(4);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto len = r.u32();
    Section s;
    s.offset = r.offset();
    s.payload = r.raw(len);
    c.sections.push_back(s);
  }
  r.expect_end();
  return c;
}

Bytes read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_binary_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::kIo, "short write to " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::kIo, "short write to " + path);
}

}  // namespace lsk
