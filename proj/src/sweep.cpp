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

#include <optional>

#include "artamp/error.hpp"
#include "artamp/pipeline.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace artamp {
namespace {

struct FeatureSet {
  std::vector<std::optional<FeatureVector>> processed;
  std::vector<std::optional<FeatureVector>> raw;
  std::size_t failed = 0;
  std::string first_error;
};

FeatureSet ComputeFeatures(const PipelineConfig& config,
                           const std::vector<ManifestEntry>& entries,
                           bool want_processed, bool want_raw) {
  const FeatureConfig fc;
  FeatureSet set;
  set.processed.resize(entries.size());
  set.raw.resize(entries.size());
  std::vector<std::string> errors(entries.size());
  internal::ParallelFor(entries.size(), config.parallelism, [&](std::size_t i) {
    try {
      if (want_processed)
        set.processed[i] = ExtractFeatures(ProcessEntry(config, entries[i]).amplified, fc);
      if (want_raw) set.raw[i] = ExtractFeatures(LoadCropped(config, entries[i]), fc);
    } catch (const std::exception& e) {
      errors[i] = entries[i].utterance_id + ": " + e.what();
    }
  });
  for (const std::string& e : errors) {
    if (e.empty()) continue;
    if (set.failed++ == 0) set.first_error = e;
  }
  return set;
}

}  // namespace

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kAlpha: return "alpha";
    case SweepAxis::kSnrDb: return "snr_db";
    case SweepAxis::kNoiseColor: return "noise_color";
    case SweepAxis::kExtractionMode: return "extraction_mode";
    case SweepAxis::kSkipNoiseAddition: return "skip_noise_addition";
  }
  return "alpha";
}

std::optional<SweepAxis> ParseSweepAxis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::kAlpha, SweepAxis::kSnrDb, SweepAxis::kNoiseColor,
                      SweepAxis::kExtractionMode, SweepAxis::kSkipNoiseAddition})
    if (SweepAxisName(a) == name) return a;
  return std::nullopt;
}

CellResult EvaluateConfig(const PipelineConfig& config,
                          const std::vector<ManifestEntry>& train,
                          const std::vector<ManifestEntry>& eval,
                          const TdcfParams& tdcf, EvalInput input) {
  CellResult result;
  try {
    config.Validate();
    const bool pipeline = input == EvalInput::kPipeline;
    const FeatureSet train_set = ComputeFeatures(
        config, train, pipeline, !pipeline || config.include_raw_training);
    const FeatureSet eval_set = ComputeFeatures(config, eval, pipeline, !pipeline);
    result.failed_utterances = train_set.failed + eval_set.failed;
    if (result.failed_utterances > 0) {
      result.message = std::to_string(result.failed_utterances) +
                       " utterance(s) failed; first: " +
                       (train_set.failed ? train_set.first_error
                                         : eval_set.first_error);
      return result;
    }

    std::vector<LabeledFeatures> training;
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (train_set.processed[i])
        training.push_back({*train_set.processed[i], train[i].label});
      if (train_set.raw[i]) training.push_back({*train_set.raw[i], train[i].label});
    }
    const GaussianModel model = FitGaussian(training);

    std::vector<ScoreRecord> scores;
    scores.reserve(eval.size());
    for (std::size_t i = 0; i < eval.size(); ++i) {
      const FeatureVector& f =
          pipeline ? *eval_set.processed[i] : *eval_set.raw[i];
      scores.push_back(ScoreRecord{eval[i].utterance_id, eval[i].label,
                                   eval[i].attack_id, ScoreFeatures(model, f)});
    }
    result.eer = Eer(scores);
    result.min_tdcf = MinTdcf(scores, tdcf);
    result.ok = true;
  } catch (const Error& e) {
    result.ok = false;
    result.message = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  return result;
}

std::vector<SweepRow> Sweep(const PipelineConfig& config,
                            const std::vector<ManifestEntry>& train,
                            const std::vector<ManifestEntry>& eval,
                            SweepAxis axis,
                            const std::vector<std::string>& values,
                            const TdcfParams& tdcf) {
  const std::string axis_name(SweepAxisName(axis));
  std::vector<PipelineConfig> cells;
  for (const std::string& v : values) {
    PipelineConfig cell = config;
    SetConfigValue(&cell, axis_name, v);
    cells.push_back(cell);
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < values.size(); ++i)
    rows.push_back({axis_name, values[i], EvaluateConfig(cells[i], train, eval, tdcf)});
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = "axis,value,status,eer,min_tdcf,failed_utterances\n";
  for (const SweepRow& r : rows) {
    out += r.axis + "," + r.value + "," + (r.result.ok ? "ok" : "failed") + ",";
    if (r.result.ok)
      out += internal::FormatDouble(r.result.eer) + "," +
             internal::FormatDouble(r.result.min_tdcf);
    else
      out += ",";
    out += "," + std::to_string(r.result.failed_utterances) + "\n";
  }
  return out;
}

}  // namespace artamp
