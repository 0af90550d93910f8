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

#ifndef ARTAMP_DETECTOR_HPP_
#define ARTAMP_DETECTOR_HPP_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "artamp/metrics.hpp"
#include "artamp/stft.hpp"
#include "artamp/waveform.hpp"

namespace artamp {

struct FeatureConfig {
  std::size_t n_bands = 40;
  double split_hz = 4000.0;
  StftConfig stft;

  std::size_t dimension() const { return 2 * n_bands + 2; }
  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

/// Layout: n_bands mel log-energy means, n_bands variances of the same,
/// mean spectral flatness, then energy above split_hz over energy below.
using FeatureVector = std::vector<double>;

/// Throws kTooShort for signals shorter than one analysis window.
FeatureVector ExtractFeatures(const Waveform& w, const FeatureConfig& config);

struct LabeledFeatures {
  FeatureVector features;
  Label label;
};

inline constexpr double kVarianceFloor = 1e-6;

/// Diagonal-covariance Gaussian per class. Index 0 is bona fide, 1 spoof.
struct GaussianModel {
  FeatureConfig feature_config;
  std::array<std::vector<double>, 2> mean;
  std::array<std::vector<double>, 2> variance;
  std::array<double, 2> prior{0.5, 0.5};
  // Hash of the pipeline configuration the training audio went through.
  std::string config_hash;

  std::size_t dimension() const { return mean[0].size(); }
};

/// Per-class sample mean and unbiased variance (floored at kVarianceFloor),
/// priors from class counts. The result does not depend on input order.
/// Throws kMissingClass unless each class has at least two examples.
GaussianModel FitGaussian(std::span<const LabeledFeatures> data,
                          const FeatureConfig& feature_config = {});

/// log p(f | bona fide) - log p(f | spoof) + log(prior ratio).
double ScoreFeatures(const GaussianModel& model, const FeatureVector& f);

void SaveModel(const GaussianModel& model, const std::filesystem::path& path);
GaussianModel LoadModel(const std::filesystem::path& path);

}  // namespace artamp

#endif  // ARTAMP_DETECTOR_HPP_
