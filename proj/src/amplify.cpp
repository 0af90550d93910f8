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

#include "artamp/amplify.hpp"

#include <cmath>
#include <vector>

#include "artamp/error.hpp"
#include "artamp/mixing.hpp"

namespace artamp {

std::string_view ExtractionModeName(ExtractionMode mode) {
  return mode == ExtractionMode::kProjection ? "projection" : "naive";
}

std::optional<ExtractionMode> ParseExtractionMode(std::string_view name) {
  if (name == "projection") return ExtractionMode::kProjection;
  if (name == "naive") return ExtractionMode::kNaive;
  return std::nullopt;
}

Residual ExtractResidual(const Waveform& x, const Waveform& x_hat,
                         ExtractionMode mode) {
  RequireSameShape(x, x_hat, "extract_residual");
  double weight = 1.0;
  if (mode == ExtractionMode::kProjection) {
    const double denom = x_hat.Energy();
    if (denom <= 0.0)
      throw Error(ErrorCode::kZeroEnergy,
                  "extract_residual: enhanced signal is silent");
    weight = Dot(x.samples(), x_hat.samples()) / denom;
  }
  std::vector<double> a(x.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = x[i] - weight * x_hat[i];
  return Residual{Waveform(std::move(a), x.sample_rate()), weight};
}

Waveform Amplify(const Waveform& x, const Residual& r, const AmplifySpec& spec) {
  RequireSameShape(x, r.a_hat, "amplify");
  if (!(spec.alpha >= 0.0) || !std::isfinite(spec.alpha))
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must be finite and non-negative");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = x[i] + spec.alpha * r.a_hat[i];
  return Waveform(std::move(out), x.sample_rate());
}

ProcessedUtterance ProcessUtterance(const Waveform& x,
                                    const UtteranceConfig& config,
                                    const EnhancerKind& enhancer,
                                    std::uint64_t noise_seed) {
  const char* stage = "noise";
  try {
    std::optional<Waveform> noisy;
    if (!config.skip_noise_addition) {
      const Waveform n = GenerateNoise(
          {config.noise_color, x.size(), x.sample_rate(), noise_seed});
      stage = "mix";
      noisy = AddNoiseAtSnr(x, n, MixSpec{config.snr_db});
    }
    const Waveform& y = noisy ? *noisy : x;
    stage = "enhance";
    const Waveform x_hat = Enhance(enhancer, y, &x);
    stage = "extract";
    const Residual r = ExtractResidual(x, x_hat, config.extraction_mode);
    stage = "amplify";
    Waveform out = Amplify(x, r, AmplifySpec{config.alpha});
    return ProcessedUtterance{std::move(out), r.projection_weight, x.Energy(),
                              x_hat.Energy(), r.a_hat.Energy()};
  } catch (const Error& e) {
    RethrowInStage(stage, e);
  }
}

}  // namespace artamp
