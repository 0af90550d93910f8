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

#ifndef ARTAMP_MIXING_HPP_
#define ARTAMP_MIXING_HPP_

#include "artamp/waveform.hpp"

namespace artamp {

struct MixSpec {
  double snr_db = 0.0;
};

/// y = x + sqrt(|x|^2 / (|n|^2 * 10^(snr/10))) * n. The result is not
/// clipped. Errors: kZeroEnergy for silent x or n, kLengthMismatch.
Waveform AddNoiseAtSnr(const Waveform& x, const Waveform& n,
                       const MixSpec& spec);

/// Blind SNR estimate from the waveform amplitude distribution (Gamma speech
/// of shape 0.4 in Gaussian noise), interpolated in the standard gain table
/// and clamped to [-20, 100] dB. Errors: kDegenerateInput for silent input
/// or anything shorter than 0.1 s.
double WadaSnrEstimate(const Waveform& x);

}  // namespace artamp

#endif  // ARTAMP_MIXING_HPP_
