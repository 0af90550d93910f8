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

#include "artamp/waveform.hpp"

#include <cmath>
#include <random>
#include <string>

#include "artamp/error.hpp"

namespace artamp {

Waveform::Waveform(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (samples_.empty())
    throw Error(ErrorCode::kInvalidArgument, "waveform must not be empty");
  if (sample_rate_ <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                "sample rate must be positive, got " +
                    std::to_string(sample_rate_));
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]))
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite sample at index " + std::to_string(i));
  }
}

double Waveform::Energy() const { return SquaredNorm(samples_); }

double Waveform::Rms() const {
  return std::sqrt(Energy() / static_cast<double>(samples_.size()));
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double SquaredNorm(std::span<const double> a) { return Dot(a, a); }

void RequireSameShape(const Waveform& a, const Waveform& b, const char* what) {
  if (a.size() != b.size() || a.sample_rate() != b.sample_rate()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::string(what) + ": signals differ in shape (" +
                    std::to_string(a.size()) + " @ " +
                    std::to_string(a.sample_rate()) + " Hz vs " +
                    std::to_string(b.size()) + " @ " +
                    std::to_string(b.sample_rate()) + " Hz)");
  }
}

Waveform CropOrPad(const Waveform& w, double target_seconds,
                   std::uint64_t seed) {
  if (!(target_seconds > 0.0) || !std::isfinite(target_seconds))
    throw Error(ErrorCode::kInvalidArgument, "target length must be positive");
  const double exact = std::round(target_seconds * w.sample_rate());
  if (exact < 1.0)
    throw Error(ErrorCode::kInvalidArgument,
                "target length rounds to zero samples");
  const auto target = static_cast<std::size_t>(exact);
  const auto in = w.samples();
  if (in.size() == target) return w;

  std::vector<double> out(target);
  if (in.size() > target) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> offset_dist(0,
                                                           in.size() - target);
    const std::size_t offset = offset_dist(rng);
    std::copy_n(in.begin() + static_cast<std::ptrdiff_t>(offset), target,
                out.begin());
  } else {
    for (std::size_t i = 0; i < target; ++i) out[i] = in[i % in.size()];
  }
  return Waveform(std::move(out), w.sample_rate());
}

double MeasureSnr(const Waveform& clean, const Waveform& mixture) {
  RequireSameShape(clean, mixture, "measure_snr");
  const double signal = clean.Energy();
  if (signal <= 0.0)
    throw Error(ErrorCode::kZeroEnergy, "measure_snr: clean signal is silent");
  double noise = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    const double d = mixture[i] - clean[i];
    noise += d * d;
  }
  if (noise <= 0.0)
    throw Error(ErrorCode::kOutOfRange,
                "measure_snr: mixture equals clean signal (infinite SNR)");
  return 10.0 * std::log10(signal / noise);
}

}  // namespace artamp
