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

#ifndef ARTAMP_AMPLIFY_HPP_
#define ARTAMP_AMPLIFY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "artamp/enhance.hpp"
#include "artamp/noise.hpp"
#include "artamp/waveform.hpp"

namespace artamp {

enum class ExtractionMode { kProjection, kNaive };

std::string_view ExtractionModeName(ExtractionMode mode);
std::optional<ExtractionMode> ParseExtractionMode(std::string_view name);

/// Residual left in the raw utterance after removing the enhancer output.
struct Residual {
  Waveform a_hat;
  double projection_weight;
};

struct AmplifySpec {
  double alpha = 1.4;
};

/// Projection mode: w = <x, x_hat> / |x_hat|^2 and a_hat = x - w * x_hat,
/// which is orthogonal to x_hat and independent of x_hat's scale.
/// Naive mode: a_hat = x - x_hat with w reported as 1.
/// Errors: kLengthMismatch; kZeroEnergy for a silent x_hat in projection mode.
Residual ExtractResidual(const Waveform& x, const Waveform& x_hat,
                         ExtractionMode mode);

/// x + alpha * a_hat. alpha must be finite and non-negative.
Waveform Amplify(const Waveform& x, const Residual& r, const AmplifySpec& spec);

/// Per-utterance settings of the noise -> enhance -> extract -> amplify chain.
struct UtteranceConfig {
  double snr_db = 0.0;
  NoiseColor noise_color = NoiseColor::kWhite;
  double alpha = 1.4;
  ExtractionMode extraction_mode = ExtractionMode::kProjection;
  bool skip_noise_addition = false;
};

struct ProcessedUtterance {
  Waveform amplified;
  double projection_weight;
  double input_energy;     // |x|^2
  double enhanced_energy;  // |x_hat|^2
  double residual_energy;  // |a_hat|^2
};

/// Adds seeded noise of the configured colour at the target SNR (unless
/// skipped), enhances, extracts the residual of the raw x against the
/// enhanced signal and adds it back scaled by alpha. Errors from a stage are
/// re-thrown with the stage name prefixed.
ProcessedUtterance ProcessUtterance(const Waveform& x,
                                    const UtteranceConfig& config,
                                    const EnhancerKind& enhancer,
                                    std::uint64_t noise_seed);

}  // namespace artamp

#endif  // ARTAMP_AMPLIFY_HPP_
