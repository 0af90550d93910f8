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

#include "artamp/pipeline.hpp"

#include <fstream>
#include <optional>
#include <unordered_map>

#include "artamp/error.hpp"
#include "artamp/seed.hpp"
#include "artamp/wav_io.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace artamp {

namespace fs = std::filesystem;

namespace {

bool SafeFileStem(const std::string& id) {
  return !id.empty() && id != "." && id != ".." &&
         id.find('/') == std::string::npos && id.find('\\') == std::string::npos;
}

std::string Sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

Waveform LoadCropped(const PipelineConfig& config, const ManifestEntry& entry) {
  const UtteranceSeeds seeds =
      DeriveUtteranceSeeds(config.global_seed, entry.utterance_id);
  Waveform raw = [&] {
    try {
      return ReadWav(entry.path);
    } catch (const Error& e) {
      RethrowInStage("read", e);
    }
  }();
  try {
    return CropOrPad(raw, config.crop_seconds, seeds.crop);
  } catch (const Error& e) {
    RethrowInStage("crop", e);
  }
}

ProcessedUtterance ProcessEntry(const PipelineConfig& config,
                                const ManifestEntry& entry) {
  const UtteranceSeeds seeds =
      DeriveUtteranceSeeds(config.global_seed, entry.utterance_id);
  const Waveform x = LoadCropped(config, entry);
  return ProcessUtterance(x, config.utterance(), config.enhancer, seeds.noise);
}

RunSummary RunPipeline(const PipelineConfig& config,
                       const std::vector<ManifestEntry>& manifest,
                       const fs::path& out_dir) {
  config.Validate();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (!fs::is_directory(out_dir))
    throw Error(ErrorCode::kUnwritablePath,
                "cannot create output directory " + out_dir.string());

  RunSummary summary;
  summary.config_hash = ConfigHash(config);
  summary.log.resize(manifest.size());

  internal::ParallelFor(manifest.size(), config.parallelism, [&](std::size_t i) {
    const ManifestEntry& entry = manifest[i];
    UtteranceLog& log = summary.log[i];
    log.utterance_id = entry.utterance_id;
    const UtteranceSeeds seeds =
        DeriveUtteranceSeeds(config.global_seed, entry.utterance_id);
    log.crop_seed = seeds.crop;
    log.noise_seed = seeds.noise;
    try {
      if (!SafeFileStem(entry.utterance_id))
        throw Error(ErrorCode::kInvalidArgument,
                    "utterance id is not usable as a file name");
      ProcessedUtterance p = ProcessEntry(config, entry);
      try {
        WriteWav(p.amplified, out_dir / (entry.utterance_id + ".wav"),
                 config.output_encoding);
      } catch (const Error& e) {
        RethrowInStage("write", e);
      }
      log.ok = true;
      log.projection_weight = p.projection_weight;
      log.input_energy = p.input_energy;
      log.enhanced_energy = p.enhanced_energy;
      log.residual_energy = p.residual_energy;
    } catch (const Error& e) {
      log.message = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      log.message = std::string("internal: ") + e.what();
    }
  });

  std::vector<ManifestEntry> outputs;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    if (summary.log[i].ok) {
      ++summary.processed;
      ManifestEntry out = manifest[i];
      out.path = out_dir / (out.utterance_id + ".wav");
      outputs.push_back(std::move(out));
    } else {
      ++summary.failed;
    }
  }

  const fs::path log_path = out_dir / "run_log.tsv";
  std::ofstream log(log_path, std::ios::trunc);
  if (!log)
    throw Error(ErrorCode::kUnwritablePath, "cannot write " + log_path.string());
  log << "# artamp run log v1\n";
  log << "# config_hash=" << summary.config_hash << "\n";
  const std::string canonical = CanonicalConfigText(config);
  for (std::string_view line : internal::Split(canonical, '\n'))
    if (!line.empty()) log << "# config " << line << "\n";
  log << "# processed=" << summary.processed << " failed=" << summary.failed
      << "\n";
  log << "utterance_id\tstatus\tcrop_seed\tnoise_seed\tprojection_weight\t"
         "input_energy\tenhanced_energy\tresidual_energy\tmessage\n";
  using internal::FormatDouble;
  for (const UtteranceLog& u : summary.log) {
    log << u.utterance_id << '\t' << (u.ok ? "ok" : "failed") << '\t'
        << u.crop_seed << '\t' << u.noise_seed << '\t';
    if (u.ok) {
      log << FormatDouble(u.projection_weight) << '\t'
          << FormatDouble(u.input_energy) << '\t'
          << FormatDouble(u.enhanced_energy) << '\t'
          << FormatDouble(u.residual_energy) << '\t' << "-";
    } else {
      log << "-\t-\t-\t-\t" << Sanitize(u.message);
    }
    log << '\n';
  }
  log.close();
  if (!log)
    throw Error(ErrorCode::kUnwritablePath, "write failed: " + log_path.string());

  WriteManifest(out_dir / "manifest.tsv", outputs, summary.config_hash);
  return summary;
}

std::vector<LabeledFeatures> ManifestFeatures(
    const std::vector<ManifestEntry>& manifest, const FeatureConfig& config,
    std::size_t parallelism) {
  std::vector<LabeledFeatures> out(manifest.size());
  std::vector<std::optional<Error>> errors(manifest.size());
  internal::ParallelFor(manifest.size(), parallelism, [&](std::size_t i) {
    try {
      out[i] = {ExtractFeatures(ReadWav(manifest[i].path), config),
                manifest[i].label};
    } catch (const Error& e) {
      errors[i] = Error(e.code(), manifest[i].utterance_id + ": " + e.what());
    }
  });
  for (auto& e : errors)
    if (e) throw *e;
  return out;
}

std::vector<ScoreRecord> ScoreManifest(const GaussianModel& model,
                                       const std::vector<ManifestEntry>& manifest,
                                       std::size_t parallelism) {
  const auto features =
      ManifestFeatures(manifest, model.feature_config, parallelism);
  std::vector<ScoreRecord> out;
  out.reserve(manifest.size());
  for (std::size_t i = 0; i < manifest.size(); ++i)
    out.push_back({manifest[i].utterance_id, manifest[i].label,
                   manifest[i].attack_id,
                   ScoreFeatures(model, features[i].features)});
  return out;
}

JoinedScores JoinScores(const std::vector<ManifestEntry>& manifest,
                        std::span<const ScoreRecord> scores) {
  std::unordered_map<std::string, double> by_id;
  for (const auto& r : scores) {
    if (!by_id.emplace(r.utterance_id, r.score).second)
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate score for " + r.utterance_id);
  }
  JoinedScores out;
  out.records.reserve(manifest.size());
  for (const auto& e : manifest) {
    const auto it = by_id.find(e.utterance_id);
    if (it == by_id.end())
      throw Error(ErrorCode::kMissingId, "no score for " + e.utterance_id);
    out.records.push_back({e.utterance_id, e.label, e.attack_id, it->second});
  }
  out.extra = by_id.size() - manifest.size();
  return out;
}

}  // namespace artamp
