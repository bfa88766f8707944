// Copyright 2026 The Sonotex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sonotex/wav.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "sonotex/errors.hpp"

namespace sonotex {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& s, std::uint32_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

Signal read_wav(const std::filesystem::path& path,
                std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> buf{std::istreambuf_iterator<char>(in),
                                 std::istreambuf_iterator<char>()};
  if (buf.empty()) throw IoError("empty file: " + path.string());
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw IoError("not a RIFF/WAVE file: " + path.string());

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_size = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const unsigned char* hdr = buf.data() + pos;
    const std::uint32_t chunk_size = read_u32(hdr + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (body + 16 > buf.size()) throw IoError("truncated fmt chunk");
      format = read_u16(buf.data() + body);
      channels = read_u16(buf.data() + body + 2);
      rate = read_u32(buf.data() + body + 4);
      bits = read_u16(buf.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (body + chunk_size > buf.size()) throw IoError("truncated data chunk");
      data = buf.data() + body;
      data_size = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    throw IoError("missing fmt or data chunk: " + path.string());
  if (format != 1)
    throw IoError("unsupported WAV format tag " + std::to_string(format) +
                  " (only PCM is supported)");
  if (bits != 16)
    throw IoError("unsupported bit depth " + std::to_string(bits) +
                  " (only 16-bit PCM is supported)");
  if (channels == 0) throw IoError("fmt chunk declares zero channels");
  if (channels > 1 && warnings != nullptr)
    warnings->push_back("multi-channel file; using channel 0 of " +
                        std::to_string(channels));

  const std::size_t frame_bytes = 2u * channels;
  const std::size_t frames = data_size / frame_bytes;
  if (frames == 0) throw IoError("no audio frames in " + path.string());

  Signal out;
  out.sample_rate = static_cast<int>(rate);
  out.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const unsigned char* p = data + i * frame_bytes;
    const auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
    out.samples[i] = static_cast<double>(v);
  }
  out.validate();
  return out;
}

void write_wav(const Signal& signal, const std::filesystem::path& path) {
  signal.validate();
  const std::size_t n = signal.samples.size();

  std::string pcm;
  pcm.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::nearbyint(signal.samples[i]);
    if (r < -32768.0 || r > 32767.0)
      throw DataError("sample " + std::to_string(i) + " (" +
                      std::to_string(signal.samples[i]) +
                      ") outside 16-bit range");
    put_u16(pcm, static_cast<std::uint16_t>(static_cast<std::int16_t>(r)));
  }

  std::string out;
  out.reserve(44 + pcm.size());
  out += "RIFF";
  put_u32(out, static_cast<std::uint32_t>(36 + pcm.size()));
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(signal.sample_rate * 2));  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out += "data";
  put_u32(out, static_cast<std::uint32_t>(pcm.size()));
  out += pcm;

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed: " + path.string());
}

}  // namespace sonotex
