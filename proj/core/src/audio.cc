// core/src/audio.cc

// Copyright 2026 tsasr authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "tsasr/audio.h"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace tsasr {

namespace {

void PutU32(std::string *buf, uint32_t v) {
  for (int i = 0; i < 4; ++i) buf->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutU16(std::string *buf, uint16_t v) {
  for (int i = 0; i < 2; ++i) buf->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint32_t GetU32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t GetU16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void AudioSignal::Validate() const {
  TSASR_CHECK(sample_rate > 0, "sample_rate must be positive");
  TSASR_CHECK(!samples.empty(), "signal must have at least one sample");
  for (double s : samples)
    TSASR_CHECK(std::isfinite(s), "non-finite sample value");
}

double MeanPower(const AudioSignal &signal) {
  TSASR_CHECK(!signal.samples.empty(), "empty signal has no power");
  double acc = 0.0;
  for (double s : signal.samples) acc += s * s;
  return acc / signal.samples.size();
}

void WriteWav(const std::string &path, const AudioSignal &signal) {
  signal.Validate();
  const uint32_t num_samples = static_cast<uint32_t>(signal.samples.size());
  const uint32_t data_bytes = num_samples * 2;
  std::string buf;
  buf.reserve(44 + data_bytes);
  buf.append("RIFF");
  PutU32(&buf, 36 + data_bytes);
  buf.append("WAVE");
  buf.append("fmt ");
  PutU32(&buf, 16);
  PutU16(&buf, 1);  // PCM
  PutU16(&buf, 1);  // mono
  PutU32(&buf, static_cast<uint32_t>(signal.sample_rate));
  PutU32(&buf, static_cast<uint32_t>(signal.sample_rate) * 2);
  PutU16(&buf, 2);   // block align
  PutU16(&buf, 16);  // bits per sample
  buf.append("data");
  PutU32(&buf, data_bytes);
  for (double s : signal.samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    int v = static_cast<int>(std::lrint(clamped * 32767.0));
    v = std::clamp(v, -32768, 32767);
    PutU16(&buf, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  std::ofstream out(path, std::ios::binary);
  TSASR_CHECK(out.good(), "cannot open for write: " << path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  TSASR_CHECK(out.good(), "short write: " << path);
}

AudioSignal ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  TSASR_CHECK(in.good(), "cannot open for read: " << path);
  std::string raw((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  TSASR_CHECK(raw.size() >= 44, "WAV too short: " << path);
  const unsigned char *p = reinterpret_cast<const unsigned char *>(raw.data());
  TSASR_CHECK(std::memcmp(p, "RIFF", 4) == 0 && std::memcmp(p + 8, "WAVE", 4) == 0,
              "not a RIFF/WAVE file: " << path);

  AudioSignal signal;
  size_t pos = 12;
  bool have_fmt = false, have_data = false;
  uint16_t channels = 0, bits = 0;
  while (pos + 8 <= raw.size()) {
    const unsigned char *chunk = p + pos;
    uint32_t size = GetU32(chunk + 4);
    size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      TSASR_CHECK(size >= 16 && body + 16 <= raw.size(), "bad fmt chunk");
      uint16_t format = GetU16(p + body);
      channels = GetU16(p + body + 2);
      signal.sample_rate = static_cast<int>(GetU32(p + body + 4));
      bits = GetU16(p + body + 14);
      TSASR_CHECK(format == 1, "only PCM WAV supported: " << path);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      TSASR_CHECK(have_fmt, "data chunk before fmt: " << path);
      TSASR_CHECK(channels == 1 && bits == 16,
                  "only 16-bit mono supported: " << path);
      TSASR_CHECK(body + size <= raw.size(), "truncated data chunk: " << path);
      uint32_t n = size / 2;
      signal.samples.resize(n);
      for (uint32_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(GetU16(p + body + 2 * i));
        signal.samples[i] = v / 32767.0;
      }
      have_data = true;
      break;
    }
    pos = body + size + (size & 1);
  }
  TSASR_CHECK(have_data, "no data chunk: " << path);
  signal.Validate();
  return signal;
}

}  // namespace tsasr
