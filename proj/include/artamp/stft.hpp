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

#ifndef ARTAMP_STFT_HPP_
#define ARTAMP_STFT_HPP_

#include <complex>
#include <span>
#include <vector>

namespace artamp {

/// Periodic Hann analysis window with 50% overlap; the shifted windows sum to
/// one, so overlap-add without a synthesis window reconstructs the input.
struct StftConfig {
  std::size_t window_length = 512;
  std::size_t hop = 256;

  /// Throws kInvalidArgument unless hop == window_length / 2 and the window
  /// length is even and at least 2.
  void Validate() const;
  std::size_t bins() const { return window_length / 2 + 1; }
  friend bool operator==(const StftConfig&, const StftConfig&) = default;
};

struct Spectrogram {
  std::size_t frames = 0;
  std::size_t bins = 0;
  std::vector<std::complex<double>> data;  // frame-major

  std::complex<double>& at(std::size_t frame, std::size_t bin) {
    return data[frame * bins + bin];
  }
  const std::complex<double>& at(std::size_t frame, std::size_t bin) const {
    return data[frame * bins + bin];
  }
};

/// The signal is zero-padded by one hop at the front and enough at the back
/// that every input sample lies under two frames.
Spectrogram Stft(std::span<const double> x, const StftConfig& config);

/// Overlap-add inverse of Stft, returning exactly `length` samples.
std::vector<double> Istft(const Spectrogram& spec, const StftConfig& config,
                          std::size_t length);

std::vector<double> HannWindow(std::size_t length);

}  // namespace artamp

#endif  // ARTAMP_STFT_HPP_
