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

#include "artamp/noise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "artamp/error.hpp"
#include "fft.hpp"

namespace artamp {
namespace {

constexpr std::size_t kMinWelchFrames = 8;
constexpr std::size_t kMaxWelchSegment = 4096;
constexpr std::size_t kMinWelchSegment = 256;

}  // namespace

std::string_view NoiseColorName(NoiseColor color) {
  switch (color) {
    case NoiseColor::kWhite: return "white";
    case NoiseColor::kPink: return "pink";
    case NoiseColor::kViolet: return "violet";
  }
  return "white";
}

std::optional<NoiseColor> ParseNoiseColor(std::string_view name) {
  if (name == "white") return NoiseColor::kWhite;
  if (name == "pink") return NoiseColor::kPink;
  if (name == "violet") return NoiseColor::kViolet;
  return std::nullopt;
}

Waveform GenerateNoise(const NoiseSpec& spec) {
  if (spec.length == 0)
    throw Error(ErrorCode::kInvalidArgument, "noise length must be >= 1");
  if (spec.sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");

  const std::size_t n = spec.length;
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> white(n);
  for (double& v : white) v = gauss(rng);

  if (n == 1) {
    // No non-DC bin exists; the best unit-RMS signal is the sign of the draw.
    return Waveform({white[0] < 0.0 ? -1.0 : 1.0}, spec.sample_rate);
  }

  internal::RealFft fft(n);
  std::vector<std::complex<double>> bins(fft.bins());
  fft.Forward(white, bins);
  bins[0] = 0.0;
  for (std::size_t k = 1; k < bins.size(); ++k) {
    const double f = static_cast<double>(k);
    switch (spec.color) {
      case NoiseColor::kWhite: break;
      case NoiseColor::kPink: bins[k] /= std::sqrt(f); break;
      case NoiseColor::kViolet: bins[k] *= f; break;
    }
  }
  std::vector<double> shaped(n);
  fft.Inverse(bins, shaped);

  double mean = 0.0;
  for (double v : shaped) mean += v;
  mean /= static_cast<double>(n);
  double energy = 0.0;
  for (double& v : shaped) {
    v -= mean;
    energy += v * v;
  }
  const double scale = 1.0 / std::sqrt(energy / static_cast<double>(n));
  for (double& v : shaped) v *= scale;
  return Waveform(std::move(shaped), spec.sample_rate);
}

double PsdSlope(const Waveform& w, double f_lo, double f_hi) {
  const double nyquist = w.sample_rate() / 2.0;
  if (!(f_lo > 0.0) || !(f_lo < f_hi) || !(f_hi < nyquist))
    throw Error(ErrorCode::kInvalidArgument,
                "psd_slope: need 0 < f_lo < f_hi < sample_rate/2");

  // Largest power-of-two segment that still yields enough 50%-overlap frames.
  std::size_t seg = kMaxWelchSegment;
  while (seg >= kMinWelchSegment &&
         (w.size() < seg || (w.size() - seg) / (seg / 2) + 1 < kMinWelchFrames))
    seg /= 2;
  if (seg < kMinWelchSegment)
    throw Error(ErrorCode::kTooShort,
                "psd_slope: signal too short for 8 averaged frames");

  const std::size_t hop = seg / 2;
  const std::size_t frames = (w.size() - seg) / hop + 1;
  internal::RealFft fft(seg);
  std::vector<double> window(seg);
  for (std::size_t i = 0; i < seg; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / seg);

  std::vector<double> power(fft.bins(), 0.0);
  std::vector<double> frame(seg);
  std::vector<std::complex<double>> spec(fft.bins());
  const auto x = w.samples();
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < seg; ++i) frame[i] = x[f * hop + i] * window[i];
    fft.Forward(frame, spec);
    for (std::size_t k = 0; k < spec.size(); ++k) power[k] += std::norm(spec[k]);
  }

  const double bin_hz = static_cast<double>(w.sample_rate()) / seg;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t k = 1; k < power.size(); ++k) {
    const double f = k * bin_hz;
    if (f < f_lo || f > f_hi) continue;
    // Floor keeps a finite log when a bin is exactly empty (e.g. a pure tone).
    const double p = std::max(power[k] / frames, 1e-300);
    const double lx = std::log2(f);
    const double ly = 10.0 * std::log10(p);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2)
    throw Error(ErrorCode::kInvalidArgument,
                "psd_slope: fewer than two spectral bins inside the band");
  const double denom = count * sxx - sx * sx;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace artamp
