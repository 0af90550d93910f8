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

#include "artamp/stft.hpp"

#include <cmath>
#include <numbers>

#include "artamp/error.hpp"
#include "fft.hpp"

namespace artamp {

void StftConfig::Validate() const {
  if (window_length < 2 || window_length % 2 != 0 || hop != window_length / 2)
    throw Error(ErrorCode::kInvalidArgument,
                "STFT needs an even Hann window with hop = window_length / 2");
}

std::vector<double> HannWindow(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(length));
  return w;
}

namespace {

std::size_t FrameCount(std::size_t length, const StftConfig& config) {
  // Padded length: hop in front, then round up so the last sample is covered
  // by a full overlapping pair.
  const std::size_t hop = config.hop;
  const std::size_t body = (length + hop - 1) / hop * hop;
  return body / hop + 1;
}

}  // namespace

Spectrogram Stft(std::span<const double> x, const StftConfig& config) {
  config.Validate();
  const std::size_t win = config.window_length;
  const std::size_t hop = config.hop;
  const std::size_t frames = FrameCount(x.size(), config);
  const std::vector<double> window = HannWindow(win);
  internal::RealFft fft(win);

  Spectrogram spec;
  spec.frames = frames;
  spec.bins = config.bins();
  spec.data.resize(frames * spec.bins);
  std::vector<double> frame(win);
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < win; ++i) {
      // Padded index f*hop + i maps to input index f*hop + i - hop.
      const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(f * hop + i) -
                                 static_cast<std::ptrdiff_t>(hop);
      const double v = (src >= 0 && static_cast<std::size_t>(src) < x.size())
                           ? x[static_cast<std::size_t>(src)]
                           : 0.0;
      frame[i] = v * window[i];
    }
    fft.Forward(frame, std::span(spec.data).subspan(f * spec.bins, spec.bins));
  }
  return spec;
}

std::vector<double> Istft(const Spectrogram& spec, const StftConfig& config,
                          std::size_t length) {
  config.Validate();
  const std::size_t win = config.window_length;
  const std::size_t hop = config.hop;
  const std::vector<double> window = HannWindow(win);
  internal::RealFft fft(win);

  const std::size_t padded = (spec.frames - 1) * hop + win;
  std::vector<double> acc(padded, 0.0);
  std::vector<double> wsum(padded, 0.0);
  std::vector<double> frame(win);
  for (std::size_t f = 0; f < spec.frames; ++f) {
    fft.Inverse(std::span(spec.data).subspan(f * spec.bins, spec.bins), frame);
    for (std::size_t i = 0; i < win; ++i) {
      acc[f * hop + i] += frame[i];
      wsum[f * hop + i] += window[i];
    }
  }
  std::vector<double> out(length, 0.0);
  for (std::size_t i = 0; i < length && i + hop < padded; ++i) {
    const double norm = wsum[i + hop];
    out[i] = norm > 1e-12 ? acc[i + hop] / norm : 0.0;
  }
  return out;
}

}  // namespace artamp
