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

#include "artamp/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "artamp/error.hpp"

namespace artamp {

std::string_view EnhancerTagName(EnhancerTag tag) {
  switch (tag) {
    case EnhancerTag::kIdentity: return "identity";
    case EnhancerTag::kOracleClean: return "oracle_clean";
    case EnhancerTag::kSpectralSubtraction: return "spectral_subtraction";
    case EnhancerTag::kWiener: return "wiener";
    case EnhancerTag::kExternal: return "external";
  }
  return "identity";
}

std::optional<EnhancerTag> ParseEnhancerTag(std::string_view name) {
  if (name == "identity") return EnhancerTag::kIdentity;
  if (name == "oracle_clean") return EnhancerTag::kOracleClean;
  if (name == "spectral_subtraction") return EnhancerTag::kSpectralSubtraction;
  if (name == "wiener") return EnhancerTag::kWiener;
  if (name == "external") return EnhancerTag::kExternal;
  return std::nullopt;
}

void EnhancerKind::Validate() const {
  stft.Validate();
  if (!(subtraction_factor >= 0.0) || !std::isfinite(subtraction_factor))
    throw Error(ErrorCode::kInvalidArgument, "subtraction factor must be >= 0");
  if (!(spectral_floor >= 0.0 && spectral_floor <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "spectral floor must be in [0, 1]");
  if (!(wiener_floor >= 0.0 && wiener_floor <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "Wiener floor must be in [0, 1]");
  if (!(noise_percentile > 0.0 && noise_percentile < 100.0))
    throw Error(ErrorCode::kInvalidArgument,
                "noise percentile must be in (0, 100)");
  if (noise_smoothing_bins < 1 || noise_smoothing_bins % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "noise smoothing width must be a positive odd bin count");
  if (tag == EnhancerTag::kExternal) {
    if (command.empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "external enhancer needs a command template");
    if (command.find("{in}") == std::string::npos ||
        command.find("{out}") == std::string::npos)
      throw Error(ErrorCode::kInvalidArgument,
                  "external command template must contain {in} and {out}");
    if (!(timeout_s > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "timeout must be positive");
  }
}

Waveform FitLength(const Waveform& w, std::size_t length) {
  if (w.size() == length) return w;
  std::vector<double> out(length, 0.0);
  std::copy_n(w.samples().begin(), std::min(length, w.size()), out.begin());
  return Waveform(std::move(out), w.sample_rate());
}

std::vector<double> EstimateNoiseProfile(const Spectrogram& spec,
                                         double percentile,
                                         std::size_t smoothing_bins) {
  std::vector<double> raw(spec.bins, 0.0);
  std::vector<double> mags(spec.frames);
  const double pos = percentile / 100.0 * static_cast<double>(spec.frames - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, spec.frames - 1);
  const double frac = pos - static_cast<double>(lo);
  for (std::size_t k = 0; k < spec.bins; ++k) {
    for (std::size_t f = 0; f < spec.frames; ++f) mags[f] = std::abs(spec.at(f, k));
    std::sort(mags.begin(), mags.end());
    raw[k] = mags[lo] + frac * (mags[hi] - mags[lo]);
  }

  // Rayleigh magnitude with scale s: P(|N| <= r) = 1 - exp(-r^2 / 2s^2), RMS
  // sqrt(2) s.
  const double q = std::clamp(percentile / 100.0, 1e-6, 1.0 - 1e-6);
  const double to_rms = 1.0 / std::sqrt(-std::log1p(-q));

  const std::size_t half = smoothing_bins / 2;
  std::vector<double> profile(spec.bins);
  std::vector<double> window;
  for (std::size_t k = 0; k < spec.bins; ++k) {
    const std::size_t a = k >= half ? k - half : 0;
    const std::size_t b = std::min(spec.bins, k + half + 1);
    window.assign(raw.begin() + static_cast<std::ptrdiff_t>(a),
                  raw.begin() + static_cast<std::ptrdiff_t>(b));
    auto mid = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
    std::nth_element(window.begin(), mid, window.end());
    profile[k] = *mid * to_rms;
  }
  return profile;
}

Waveform SpectralSubtraction(const Waveform& y, const EnhancerKind& kind) {
  Spectrogram spec = Stft(y.samples(), kind.stft);
  const std::vector<double> noise =
      EstimateNoiseProfile(spec, kind.noise_percentile,
                           kind.noise_smoothing_bins);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    for (std::size_t k = 0; k < spec.bins; ++k) {
      std::complex<double>& v = spec.at(f, k);
      const double mag = std::abs(v);
      if (mag <= 0.0) continue;
      const double target = std::max(mag - kind.subtraction_factor * noise[k],
                                     kind.spectral_floor * mag);
      v *= target / mag;
    }
  }
  return Waveform(Istft(spec, kind.stft, y.size()), y.sample_rate());
}

Waveform WienerFilter(const Waveform& y, const EnhancerKind& kind) {
  Spectrogram spec = Stft(y.samples(), kind.stft);
  const std::vector<double> noise =
      EstimateNoiseProfile(spec, kind.noise_percentile,
                           kind.noise_smoothing_bins);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    for (std::size_t k = 0; k < spec.bins; ++k) {
      std::complex<double>& v = spec.at(f, k);
      const double power = std::norm(v);
      if (power <= 0.0) continue;
      const double gain =
          std::max(1.0 - noise[k] * noise[k] / power, kind.wiener_floor);
      v *= gain;
    }
  }
  return Waveform(Istft(spec, kind.stft, y.size()), y.sample_rate());
}

Waveform Enhance(const EnhancerKind& kind, const Waveform& y,
                 const Waveform* reference_clean) {
  kind.Validate();
  switch (kind.tag) {
    case EnhancerTag::kIdentity:
      return y;
    case EnhancerTag::kOracleClean:
      if (reference_clean == nullptr)
        throw Error(ErrorCode::kMissingReference,
                    "oracle_clean enhancer needs the clean reference");
      RequireSameShape(y, *reference_clean, "oracle_clean");
      return *reference_clean;
    case EnhancerTag::kSpectralSubtraction:
      return SpectralSubtraction(y, kind);
    case EnhancerTag::kWiener:
      return WienerFilter(y, kind);
    case EnhancerTag::kExternal:
      return RunExternal(kind.command, y, kind.timeout_s);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown enhancer kind");
}

}  // namespace artamp
