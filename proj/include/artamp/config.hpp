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

#ifndef ARTAMP_CONFIG_HPP_
#define ARTAMP_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "artamp/amplify.hpp"
#include "artamp/enhance.hpp"
#include "artamp/noise.hpp"
#include "artamp/wav_io.hpp"

namespace artamp {

struct PipelineConfig {
  double snr_db = 0.0;
  NoiseColor noise_color = NoiseColor::kWhite;
  EnhancerKind enhancer;
  double alpha = 1.4;
  double crop_seconds = 4.0;
  ExtractionMode extraction_mode = ExtractionMode::kProjection;
  bool skip_noise_addition = false;
  std::uint64_t global_seed = 0;
  std::size_t parallelism = 1;
  WavEncoding output_encoding = WavEncoding::kFloat32;
  bool include_raw_training = false;

  UtteranceConfig utterance() const {
    return UtteranceConfig{snr_db, noise_color, alpha, extraction_mode,
                           skip_noise_addition};
  }

  /// Throws kConfig on any invariant violation.
  void Validate() const;
};

/// Sets one field from its textual form. Keys: snr_db, noise_color, enhancer,
/// enhancer_cmd, enhancer_timeout, subtraction_factor, spectral_floor,
/// wiener_floor, alpha, crop_seconds, extraction_mode, skip_noise_addition,
/// global_seed, parallelism, output_encoding, include_raw_training.
/// Throws kConfig for unknown keys or unparsable values.
void SetConfigValue(PipelineConfig* config, std::string_view key,
                    std::string_view value);

/// Flat "key = value" file; unset keys keep their defaults.
PipelineConfig LoadConfig(const std::filesystem::path& path);

/// Sorted "key=value" lines for every field that affects results. The worker
/// count is excluded, so runs that differ only in parallelism share a hash.
std::string CanonicalConfigText(const PipelineConfig& config);
std::string ConfigHash(const PipelineConfig& config);

}  // namespace artamp

#endif  // ARTAMP_CONFIG_HPP_
