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

#ifndef ARTAMP_PIPELINE_HPP_
#define ARTAMP_PIPELINE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "artamp/amplify.hpp"
#include "artamp/config.hpp"
#include "artamp/detector.hpp"
#include "artamp/manifest.hpp"

namespace artamp {

/// Reads the entry's audio and crops or tiles it to config.crop_seconds with
/// the utterance's crop seed.
Waveform LoadCropped(const PipelineConfig& config, const ManifestEntry& entry);

/// LoadCropped followed by ProcessUtterance with the utterance's noise seed.
ProcessedUtterance ProcessEntry(const PipelineConfig& config,
                                const ManifestEntry& entry);

struct UtteranceLog {
  std::string utterance_id;
  bool ok = false;
  std::uint64_t crop_seed = 0;
  std::uint64_t noise_seed = 0;
  double projection_weight = 0.0;
  double input_energy = 0.0;
  double enhanced_energy = 0.0;
  double residual_energy = 0.0;
  std::string message;
};

struct RunSummary {
  std::size_t processed = 0;
  std::size_t failed = 0;
  std::string config_hash;
  std::vector<UtteranceLog> log;  // manifest order
};

/// Processes every entry into <out_dir>/<utterance_id>.wav and writes
/// <out_dir>/run_log.tsv plus <out_dir>/manifest.tsv listing the outputs.
/// Failures are logged per utterance and counted, never thrown. Output is
/// byte-identical for any parallelism.
RunSummary RunPipeline(const PipelineConfig& config,
                       const std::vector<ManifestEntry>& manifest,
                       const std::filesystem::path& out_dir);

/// Features of each entry's audio as stored (no cropping). Throws on the
/// first entry that fails.
std::vector<LabeledFeatures> ManifestFeatures(
    const std::vector<ManifestEntry>& manifest, const FeatureConfig& config,
    std::size_t parallelism);

/// Scores each entry's audio with the model. Throws on the first failure.
std::vector<ScoreRecord> ScoreManifest(const GaussianModel& model,
                                       const std::vector<ManifestEntry>& manifest,
                                       std::size_t parallelism);

struct JoinedScores {
  std::vector<ScoreRecord> records;  // manifest order, manifest labels
  std::size_t extra = 0;             // scored ids not in the manifest
};

/// Attaches manifest labels and attack ids to externally produced scores.
/// Throws kMissingId naming the first manifest id without a score.
JoinedScores JoinScores(const std::vector<ManifestEntry>& manifest,
                        std::span<const ScoreRecord> scores);

enum class SweepAxis {
  kAlpha,
  kSnrDb,
  kNoiseColor,
  kExtractionMode,
  kSkipNoiseAddition,
};

std::string_view SweepAxisName(SweepAxis axis);
std::optional<SweepAxis> ParseSweepAxis(std::string_view name);

struct CellResult {
  bool ok = false;
  double eer = 0.0;
  double min_tdcf = 0.0;
  std::size_t failed_utterances = 0;
  std::string message;
};

enum class EvalInput {
  kPipeline,  // detector sees the amplified utterances
  kRaw,       // detector sees the cropped inputs
};

/// Trains the detector on the train split and scores the eval split. With
/// kPipeline, training uses amplified audio (plus raw audio when
/// config.include_raw_training is set).
CellResult EvaluateConfig(const PipelineConfig& config,
                          const std::vector<ManifestEntry>& train,
                          const std::vector<ManifestEntry>& eval,
                          const TdcfParams& tdcf,
                          EvalInput input = EvalInput::kPipeline);

struct SweepRow {
  std::string axis;
  std::string value;
  CellResult result;
};

/// One evaluated cell per value; a cell that fails is marked and the sweep
/// moves on. Throws kConfig only if a value cannot be parsed for the axis.
std::vector<SweepRow> Sweep(const PipelineConfig& config,
                            const std::vector<ManifestEntry>& train,
                            const std::vector<ManifestEntry>& eval,
                            SweepAxis axis,
                            const std::vector<std::string>& values,
                            const TdcfParams& tdcf);

/// "axis,value,status,eer,min_tdcf,failed_utterances" header plus one row per
/// cell; failed cells leave the metric columns empty.
std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace artamp

#endif  // ARTAMP_PIPELINE_HPP_
