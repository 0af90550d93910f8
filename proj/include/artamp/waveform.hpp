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

#ifndef ARTAMP_WAVEFORM_HPP_
#define ARTAMP_WAVEFORM_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace artamp {

/// A finite, non-empty mono signal at a fixed sample rate. Samples are held
/// in double precision whatever the on-disk encoding was. Immutable once
/// constructed.
class Waveform {
 public:
  /// Throws Error(kInvalidArgument) on empty input, non-finite samples or a
  /// non-positive sample rate.
  Waveform(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  int sample_rate() const { return sample_rate_; }
  double operator[](std::size_t i) const { return samples_[i]; }

  /// Sum of squared samples.
  double Energy() const;
  double Rms() const;
  double DurationSeconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }

  friend bool operator==(const Waveform&, const Waveform&) = default;

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double SquaredNorm(std::span<const double> a);

/// Throws kLengthMismatch unless both signals share length and sample rate.
void RequireSameShape(const Waveform& a, const Waveform& b, const char* what);

/// Returns a signal of exactly round(target_seconds * sample_rate) samples.
/// Longer inputs yield a seeded, uniformly placed contiguous window; shorter
/// inputs are tiled and truncated; exact-length inputs are returned as is.
Waveform CropOrPad(const Waveform& w, double target_seconds,
                   std::uint64_t seed);

/// 10*log10(|clean|^2 / |mixture - clean|^2). Throws kZeroEnergy when clean
/// is silent and kOutOfRange when mixture equals clean.
double MeasureSnr(const Waveform& clean, const Waveform& mixture);

}  // namespace artamp

#endif  // ARTAMP_WAVEFORM_HPP_
