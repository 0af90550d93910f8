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

#ifndef ARTAMP_ENHANCE_HPP_
#define ARTAMP_ENHANCE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "artamp/stft.hpp"
#include "artamp/waveform.hpp"

namespace artamp {

enum class EnhancerTag {
  kIdentity,
  kOracleClean,
  kSpectralSubtraction,
  kWiener,
  kExternal,
};

std::string_view EnhancerTagName(EnhancerTag tag);
std::optional<EnhancerTag> ParseEnhancerTag(std::string_view name);

struct EnhancerKind {
  EnhancerTag tag = EnhancerTag::kWiener;
  double subtraction_factor = 1.0;
  double spectral_floor = 0.02;  // fraction of the noisy magnitude
  double wiener_floor = 0.01;    // minimum Wiener gain
  double noise_percentile = 10.0;
  std::size_t noise_smoothing_bins = 15;  // odd; median across frequency
  std::string command;           // external only; needs {in} and {out}
  double timeout_s = 300.0;
  StftConfig stft;

  /// Throws kInvalidArgument on out-of-range parameters or an external kind
  /// without a usable command template.
  void Validate() const;
};

/// Runs the selected enhancer on y. The result always has y's length and
/// sample rate. `reference_clean` is required for kOracleClean and ignored
/// otherwise.
Waveform Enhance(const EnhancerKind& kind, const Waveform& y,
                 const Waveform* reference_clean = nullptr);

/// Per-bin noise RMS magnitude. The given percentile of each bin's frame
/// magnitudes is scaled to the RMS of a Rayleigh-distributed magnitude with
/// that percentile, then median-filtered across `smoothing_bins` bins so
/// stationary tones are not mistaken for noise.
std::vector<double> EstimateNoiseProfile(const Spectrogram& spec,
                                         double percentile,
                                         std::size_t smoothing_bins);

Waveform SpectralSubtraction(const Waveform& y, const EnhancerKind& kind);
Waveform WienerFilter(const Waveform& y, const EnhancerKind& kind);

/// Round-trips y through an external program. The template's {in} and {out}
/// placeholders are replaced by float32 mono WAV paths in a private temp
/// directory. Errors: kTimeout, kProcessFailure, kMalformedOutput, each
/// carrying the program's stderr.
Waveform RunExternal(const std::string& command_template, const Waveform& y,
                     double timeout_s);

/// Truncates or zero-pads to `length` samples.
Waveform FitLength(const Waveform& w, std::size_t length);

}  // namespace artamp

#endif  // ARTAMP_ENHANCE_HPP_
