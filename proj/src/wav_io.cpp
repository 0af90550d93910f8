// Copyright 2026  The artamp Authors
//
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

#include "artamp/wav_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "artamp/error.hpp"

namespace artamp {
namespace {

static_assert(std::endian::native == std::endian::little,
              "WAV I/O assumes a little-endian host");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

template <typename T>
T LoadLe(const unsigned char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

template <typename T>
void StoreLe(std::string* out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out->append(buf, sizeof(T));
}

[[noreturn]] void Malformed(const std::filesystem::path& path,
                            const std::string& why) {
  throw Error(ErrorCode::kMalformedHeader,
              "malformed WAV header in " + path.string() + ": " + why);
}

}  // namespace

Waveform ReadWav(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(ErrorCode::kFileNotFound, "no such file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12) Malformed(path, "file shorter than RIFF header");
  if (std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0)
    Malformed(path, "missing RIFF/WAVE magic");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    const auto chunk_size = LoadLe<std::uint32_t>(chunk + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + chunk_size > size)
        Malformed(path, "truncated fmt chunk");
      format = LoadLe<std::uint16_t>(data + body);
      channels = LoadLe<std::uint16_t>(data + body + 2);
      rate = LoadLe<std::uint32_t>(data + body + 4);
      bits = LoadLe<std::uint16_t>(data + body + 14);
      if (format == kFormatExtensible) {
        if (chunk_size < 40) Malformed(path, "truncated extensible fmt chunk");
        format = LoadLe<std::uint16_t>(data + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) Malformed(path, "data chunk precedes fmt chunk");
      if (body + chunk_size > size) Malformed(path, "truncated data chunk");
      pcm = data + body;
      pcm_bytes = chunk_size;
      break;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  if (!have_fmt) Malformed(path, "no fmt chunk");
  if (pcm == nullptr) Malformed(path, "no data chunk");
  if (channels == 0) Malformed(path, "zero channels");
  if (rate == 0) Malformed(path, "zero sample rate");

  const bool is_pcm16 = format == kFormatPcm && bits == 16;
  const bool is_float32 = format == kFormatFloat && bits == 32;
  if (!is_pcm16 && !is_float32) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                path.string() + ": unsupported encoding (format " +
                    std::to_string(format) + ", " + std::to_string(bits) +
                    " bits); expected 16-bit PCM or 32-bit float");
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t frames = pcm_bytes / frame_bytes;
  if (frames == 0) Malformed(path, "data chunk holds no samples");

  std::vector<double> samples(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      const unsigned char* p = pcm + f * frame_bytes + c * bytes_per_sample;
      if (is_pcm16) {
        sum += LoadLe<std::int16_t>(p) / 32768.0;
      } else {
        sum += static_cast<double>(LoadLe<float>(p));
      }
    }
    samples[f] = sum / channels;
  }
  try {
    return Waveform(std::move(samples), static_cast<int>(rate));
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedHeader, path.string() + ": " + e.what());
  }
}

void WriteWav(const Waveform& w, const std::filesystem::path& path,
              WavEncoding encoding) {
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const std::uint16_t bits = pcm16 ? 16 : 32;
  const std::uint16_t block_align = bits / 8;
  const auto data_bytes = static_cast<std::uint32_t>(w.size() * block_align);

  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  StoreLe<std::uint32_t>(&out, 36 + data_bytes);
  out.append("WAVE");
  out.append("fmt ");
  StoreLe<std::uint32_t>(&out, 16);
  StoreLe<std::uint16_t>(&out, pcm16 ? kFormatPcm : kFormatFloat);
  StoreLe<std::uint16_t>(&out, 1);
  StoreLe<std::uint32_t>(&out, static_cast<std::uint32_t>(w.sample_rate()));
  StoreLe<std::uint32_t>(&out, static_cast<std::uint32_t>(w.sample_rate()) *
                                   block_align);
  StoreLe<std::uint16_t>(&out, block_align);
  StoreLe<std::uint16_t>(&out, bits);
  out.append("data");
  StoreLe<std::uint32_t>(&out, data_bytes);

  constexpr double kPcmMax = 1.0 - 1.0 / 32768.0;
  for (double s : w.samples()) {
    if (pcm16) {
      const double clamped = std::clamp(s, -1.0, kPcmMax);
      StoreLe<std::int16_t>(
          &out, static_cast<std::int16_t>(std::lround(clamped * 32768.0)));
    } else {
      StoreLe<float>(&out, static_cast<float>(s));
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Error(ErrorCode::kUnwritablePath, "cannot write " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  file.close();
  if (!file)
    throw Error(ErrorCode::kUnwritablePath, "write failed: " + path.string());
}

}  // namespace artamp
