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

#ifndef ARTAMP_WAV_IO_HPP_
#define ARTAMP_WAV_IO_HPP_

#include <filesystem>

#include "artamp/waveform.hpp"

namespace artamp {

enum class WavEncoding { kPcm16, kFloat32 };

/// Reads a RIFF/WAVE file holding 16-bit PCM or 32-bit IEEE float samples.
/// Multichannel frames are averaged to mono; integer samples are divided by
/// 2^15. Errors: kFileNotFound, kMalformedHeader, kUnsupportedEncoding.
Waveform ReadWav(const std::filesystem::path& path);

/// Writes a mono WAV. pcm16 clamps to [-1, 1 - 2^-15] before quantizing;
/// float32 stores the samples rounded to single precision.
/// Errors: kUnwritablePath.
void WriteWav(const Waveform& w, const std::filesystem::path& path,
              WavEncoding encoding);

}  // namespace artamp

#endif  // ARTAMP_WAV_IO_HPP_
