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

#ifndef ARTAMP_NOISE_HPP_
#define ARTAMP_NOISE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "artamp/waveform.hpp"

namespace artamp {

enum class NoiseColor { kWhite, kPink, kViolet };

std::string_view NoiseColorName(NoiseColor color);
std::optional<NoiseColor> ParseNoiseColor(std::string_view name);

struct NoiseSpec {
  NoiseColor color = NoiseColor::kWhite;
  std::size_t length = 0;
  int sample_rate = 16000;
  std::uint64_t seed = 0;
};

/// Seeded Gaussian noise shaped in the frequency domain: power flat (white),
/// proportional to 1/f (pink) or to f^2 (violet). The DC bin is removed and
/// the result scaled to unit RMS.
Waveform GenerateNoise(const NoiseSpec& spec);

/// Least-squares slope of Welch log-power against log2-frequency over
/// [f_lo, f_hi], in dB per octave. Needs at least 8 averaged frames.
/// Errors: kInvalidArgument for a bad band, kTooShort for short input.
double PsdSlope(const Waveform& w, double f_lo, double f_hi);

}  // namespace artamp

#endif  // ARTAMP_NOISE_HPP_
