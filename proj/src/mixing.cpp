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

#include "artamp/mixing.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "artamp/error.hpp"

namespace artamp {
namespace {

// G(SNR) = log(E|z|) - E[log|z|] for z = Gamma(0.4) speech + Gaussian noise,
// tabulated at 1 dB steps from -20 dB to 100 dB.
constexpr double kWadaMinDb = -20.0;
constexpr std::array<double, 121> kWadaGain = {
    0.40974774, 0.40986926, 0.40998566, 0.40969089, 0.40986186, 0.40999006,
    0.41027138, 0.41052627, 0.41101024, 0.41143264, 0.41231718, 0.41337272,
    0.41526426, 0.4178192,  0.42077252, 0.42452799, 0.42918886, 0.43510373,
    0.44234195, 0.45161485, 0.46221153, 0.47491647, 0.48883809, 0.50509236,
    0.52353709, 0.54372088, 0.56532427, 0.58847532, 0.61346212, 0.63954496,
    0.66750818, 0.69583724, 0.72454762, 0.75414799, 0.78323148, 0.81240985,
    0.84219775, 0.87166406, 0.90030504, 0.92880418, 0.95655449, 0.9835349,
    1.01047155, 1.0362095,  1.06136425, 1.08579312, 1.1094819,  1.13277995,
    1.15472826, 1.17627308, 1.19703503, 1.21671694, 1.23535898, 1.25364313,
    1.27103891, 1.28718029, 1.30302865, 1.31839527, 1.33294817, 1.34700935,
    1.3605727,  1.37345513, 1.38577122, 1.39733504, 1.40856397, 1.41959619,
    1.42983624, 1.43958467, 1.44902176, 1.45804831, 1.46669568, 1.47486938,
    1.48269965, 1.49034339, 1.49748214, 1.50435106, 1.51076426, 1.51698915,
    1.5229097,  1.528578,   1.53389835, 1.5391211,  1.5439065,  1.54858517,
    1.55310776, 1.55744391, 1.56164927, 1.56566348, 1.56938671, 1.57307767,
    1.57654764, 1.57980083, 1.58304129, 1.58602496, 1.58880681, 1.59162477,
    1.5941969,  1.59693155, 1.599446,   1.60185011, 1.60408668, 1.60627134,
    1.60826199, 1.61004547, 1.61192472, 1.61369656, 1.61534074, 1.61688905,
    1.61838916, 1.61985374, 1.62135878, 1.62268119, 1.62390423, 1.62513143,
    1.62632463, 1.6274027,  1.62842767, 1.62945532, 1.6303307,  1.63128026,
    1.63204102};

constexpr double kWadaEps = 1e-10;

}  // namespace

Waveform AddNoiseAtSnr(const Waveform& x, const Waveform& n,
                       const MixSpec& spec) {
  RequireSameShape(x, n, "add_noise_at_snr");
  if (!std::isfinite(spec.snr_db))
    throw Error(ErrorCode::kInvalidArgument, "target SNR must be finite");
  const double ex = x.Energy();
  const double en = n.Energy();
  if (ex <= 0.0)
    throw Error(ErrorCode::kZeroEnergy, "add_noise_at_snr: signal is silent");
  if (en <= 0.0)
    throw Error(ErrorCode::kZeroEnergy, "add_noise_at_snr: noise is silent");
  const double scale = std::sqrt(ex / (en * std::pow(10.0, spec.snr_db / 10.0)));
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + scale * n[i];
  return Waveform(std::move(y), x.sample_rate());
}

double WadaSnrEstimate(const Waveform& x) {
  if (x.DurationSeconds() < 0.1)
    throw Error(ErrorCode::kDegenerateInput,
                "wada_snr: input shorter than 0.1 s");
  double peak = 0.0;
  for (double v : x.samples()) peak = std::max(peak, std::abs(v));
  if (peak <= 0.0)
    throw Error(ErrorCode::kDegenerateInput, "wada_snr: input is silent");

  double abs_sum = 0.0, log_sum = 0.0;
  for (double v : x.samples()) {
    const double a = std::max(std::abs(v) / peak, kWadaEps);
    abs_sum += a;
    log_sum += std::log(a);
  }
  const double n = static_cast<double>(x.size());
  const double g = std::log(std::max(abs_sum / n, kWadaEps)) - log_sum / n;

  if (g < kWadaGain.front()) return kWadaMinDb;
  if (g > kWadaGain.back()) return kWadaMinDb + (kWadaGain.size() - 1);
  // First knot at or above g; the table is non-monotone only in its first
  // few entries, where any bracketing pair gives the same clamp region.
  std::size_t idx = 1;
  while (idx < kWadaGain.size() && kWadaGain[idx] < g) ++idx;
  const double g0 = kWadaGain[idx - 1], g1 = kWadaGain[idx];
  const double db0 = kWadaMinDb + static_cast<double>(idx - 1);
  if (g1 == g0) return db0;
  return db0 + (g - g0) / (g1 - g0);
}

}  // namespace artamp
