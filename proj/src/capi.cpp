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

#include "artamp/artamp.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "artamp/amplify.hpp"
#include "artamp/config.hpp"
#include "artamp/detector.hpp"
#include "artamp/enhance.hpp"
#include "artamp/error.hpp"
#include "artamp/manifest.hpp"
#include "artamp/metrics.hpp"
#include "artamp/mixing.hpp"
#include "artamp/noise.hpp"
#include "artamp/pipeline.hpp"
#include "artamp/synth.hpp"
#include "artamp/wav_io.hpp"
#include "artamp/waveform.hpp"

struct artamp_waveform {
  artamp::Waveform w;
};

struct artamp_config {
  artamp::PipelineConfig c;
};

struct artamp_manifest {
  artamp::Manifest m;
};

struct artamp_model {
  artamp::GaussianModel m;
};

namespace {

using artamp::Error;
using artamp::ErrorCode;

thread_local std::string last_error;

int Fail(int status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return ARTAMP_OK;
  } catch (const Error& e) {
    return Fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ARTAMP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ARTAMP_E_INTERNAL, e.what());
  } catch (...) {
    return Fail(ARTAMP_E_INTERNAL, "unknown error");
  }
}

void Require(bool ok, const char* what) {
  if (!ok)
    throw Error(ErrorCode::kInvalidArgument, std::string("null ") + what);
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

artamp_waveform* Wrap(artamp::Waveform w) {
  return new artamp_waveform{std::move(w)};
}

artamp::ExtractionMode ModeOrThrow(const char* mode) {
  Require(mode, "mode");
  const auto m = artamp::ParseExtractionMode(mode);
  if (!m)
    throw Error(ErrorCode::kInvalidArgument,
                std::string("unknown extraction mode '") + mode + "'");
  return *m;
}

}  // namespace

extern "C" {

ARTAMP_API const char* artamp_last_error(void) { return last_error.c_str(); }

ARTAMP_API const char* artamp_status_name(int status) {
  if (status == ARTAMP_OK) return "ok";
  if (status == ARTAMP_E_INTERNAL) return "internal";
  if (status < 1 || status > static_cast<int>(ErrorCode::kIo))
    return "unknown";
  return artamp::ErrorCodeName(static_cast<ErrorCode>(status));
}

ARTAMP_API void artamp_string_free(char* s) { delete[] s; }

ARTAMP_API int artamp_waveform_create(const double* samples, size_t length,
                                      int sample_rate, artamp_waveform** out) {
  return Guard([&] {
    Require(samples || length == 0, "samples");
    Require(out, "out");
    *out = Wrap(artamp::Waveform(std::vector<double>(samples, samples + length),
                                 sample_rate));
  });
}

ARTAMP_API void artamp_waveform_free(artamp_waveform* w) { delete w; }

ARTAMP_API size_t artamp_waveform_length(const artamp_waveform* w) {
  return w ? w->w.size() : 0;
}

ARTAMP_API int artamp_waveform_sample_rate(const artamp_waveform* w) {
  return w ? w->w.sample_rate() : 0;
}

ARTAMP_API const double* artamp_waveform_data(const artamp_waveform* w) {
  return w ? w->w.samples().data() : nullptr;
}

ARTAMP_API int artamp_wav_read(const char* path, artamp_waveform** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = Wrap(artamp::ReadWav(path));
  });
}

ARTAMP_API int artamp_wav_write(const artamp_waveform* w, const char* path,
                                artamp_encoding encoding) {
  return Guard([&] {
    Require(w, "waveform");
    Require(path, "path");
    if (encoding != ARTAMP_PCM16 && encoding != ARTAMP_FLOAT32)
      throw Error(ErrorCode::kUnsupportedEncoding, "unknown encoding");
    artamp::WriteWav(w->w, path,
                     encoding == ARTAMP_PCM16 ? artamp::WavEncoding::kPcm16
                                              : artamp::WavEncoding::kFloat32);
  });
}

ARTAMP_API int artamp_crop_or_pad(const artamp_waveform* w, double seconds,
                                  uint64_t seed, artamp_waveform** out) {
  return Guard([&] {
    Require(w, "waveform");
    Require(out, "out");
    *out = Wrap(artamp::CropOrPad(w->w, seconds, seed));
  });
}

ARTAMP_API int artamp_measure_snr(const artamp_waveform* clean,
                                  const artamp_waveform* mixture,
                                  double* snr_db) {
  return Guard([&] {
    Require(clean && mixture, "waveform");
    Require(snr_db, "out");
    *snr_db = artamp::MeasureSnr(clean->w, mixture->w);
  });
}

ARTAMP_API int artamp_noise_generate(const char* color, size_t length,
                                     int sample_rate, uint64_t seed,
                                     artamp_waveform** out) {
  return Guard([&] {
    Require(color, "color");
    Require(out, "out");
    const auto c = artamp::ParseNoiseColor(color);
    if (!c)
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown noise color '") + color + "'");
    *out = Wrap(artamp::GenerateNoise({*c, length, sample_rate, seed}));
  });
}

ARTAMP_API int artamp_psd_slope(const artamp_waveform* w, double f_lo,
                                double f_hi, double* db_per_octave) {
  return Guard([&] {
    Require(w, "waveform");
    Require(db_per_octave, "out");
    *db_per_octave = artamp::PsdSlope(w->w, f_lo, f_hi);
  });
}

ARTAMP_API int artamp_add_noise(const artamp_waveform* x,
                                const artamp_waveform* noise, double snr_db,
                                artamp_waveform** out) {
  return Guard([&] {
    Require(x && noise, "waveform");
    Require(out, "out");
    *out = Wrap(artamp::AddNoiseAtSnr(x->w, noise->w, {snr_db}));
  });
}

ARTAMP_API int artamp_wada_snr(const artamp_waveform* x, double* snr_db) {
  return Guard([&] {
    Require(x, "waveform");
    Require(snr_db, "out");
    *snr_db = artamp::WadaSnrEstimate(x->w);
  });
}

ARTAMP_API int artamp_enhance(const artamp_config* config,
                              const artamp_waveform* y,
                              const artamp_waveform* reference,
                              artamp_waveform** out) {
  return Guard([&] {
    Require(config, "config");
    Require(y, "waveform");
    Require(out, "out");
    *out = Wrap(artamp::Enhance(config->c.enhancer, y->w,
                                reference ? &reference->w : nullptr));
  });
}

ARTAMP_API int artamp_extract_residual(const artamp_waveform* x,
                                       const artamp_waveform* x_hat,
                                       const char* mode, artamp_waveform** out,
                                       double* projection_weight) {
  return Guard([&] {
    Require(x && x_hat, "waveform");
    Require(out, "out");
    auto r = artamp::ExtractResidual(x->w, x_hat->w, ModeOrThrow(mode));
    if (projection_weight) *projection_weight = r.projection_weight;
    *out = Wrap(std::move(r.a_hat));
  });
}

ARTAMP_API int artamp_amplify(const artamp_waveform* x,
                              const artamp_waveform* residual, double alpha,
                              artamp_waveform** out) {
  return Guard([&] {
    Require(x && residual, "waveform");
    Require(out, "out");
    *out = Wrap(artamp::Amplify(x->w, artamp::Residual{residual->w, 1.0},
                                {alpha}));
  });
}

ARTAMP_API int artamp_process_utterance(const artamp_config* config,
                                        const artamp_waveform* x,
                                        uint64_t noise_seed,
                                        artamp_waveform** out,
                                        double* projection_weight) {
  return Guard([&] {
    Require(config, "config");
    Require(x, "waveform");
    Require(out, "out");
    config->c.Validate();
    auto p = artamp::ProcessUtterance(x->w, config->c.utterance(),
                                      config->c.enhancer, noise_seed);
    if (projection_weight) *projection_weight = p.projection_weight;
    *out = Wrap(std::move(p.amplified));
  });
}

ARTAMP_API int artamp_config_create(artamp_config** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new artamp_config{};
  });
}

ARTAMP_API int artamp_config_load(const char* path, artamp_config** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new artamp_config{artamp::LoadConfig(path)};
  });
}

ARTAMP_API void artamp_config_free(artamp_config* config) { delete config; }

ARTAMP_API int artamp_config_set(artamp_config* config, const char* key,
                                 const char* value) {
  return Guard([&] {
    Require(config, "config");
    Require(key && value, "key or value");
    artamp::SetConfigValue(&config->c, key, value);
  });
}

ARTAMP_API int artamp_config_validate(const artamp_config* config) {
  return Guard([&] {
    Require(config, "config");
    config->c.Validate();
  });
}

ARTAMP_API int artamp_config_hash(const artamp_config* config, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    *out = CopyString(artamp::ConfigHash(config->c));
  });
}

ARTAMP_API int artamp_config_canonical(const artamp_config* config, char** out) {
  return Guard([&] {
    Require(config, "config");
    Require(out, "out");
    *out = CopyString(artamp::CanonicalConfigText(config->c));
  });
}

ARTAMP_API int artamp_manifest_load(const char* path, const char* format,
                                    const char* audio_root,
                                    artamp_manifest** out) {
  return Guard([&] {
    Require(path, "path");
    Require(format, "format");
    Require(out, "out");
    const auto f = artamp::ParseManifestFormat(format);
    if (!f)
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown manifest format '") + format + "'");
    *out = new artamp_manifest{artamp::LoadManifest(
        path, *f, audio_root ? std::filesystem::path(audio_root)
                             : std::filesystem::path())};
  });
}

ARTAMP_API void artamp_manifest_free(artamp_manifest* manifest) {
  delete manifest;
}

ARTAMP_API size_t artamp_manifest_size(const artamp_manifest* manifest) {
  return manifest ? manifest->m.entries.size() : 0;
}

ARTAMP_API const char* artamp_manifest_config_hash(
    const artamp_manifest* manifest) {
  if (!manifest || !manifest->m.config_hash) return nullptr;
  return manifest->m.config_hash->c_str();
}

ARTAMP_API int artamp_run_pipeline(const artamp_config* config,
                                   const artamp_manifest* manifest,
                                   const char* out_dir, size_t* processed,
                                   size_t* failed) {
  return Guard([&] {
    Require(config, "config");
    Require(manifest, "manifest");
    Require(out_dir, "out_dir");
    const auto summary =
        artamp::RunPipeline(config->c, manifest->m.entries, out_dir);
    if (processed) *processed = summary.processed;
    if (failed) *failed = summary.failed;
  });
}

ARTAMP_API int artamp_model_fit(const artamp_manifest* train,
                                size_t parallelism, artamp_model** out) {
  return Guard([&] {
    Require(train, "manifest");
    Require(out, "out");
    const artamp::FeatureConfig fc;
    const auto data = artamp::ManifestFeatures(train->m.entries, fc,
                                               parallelism ? parallelism : 1);
    auto model = artamp::FitGaussian(data, fc);
    model.config_hash = train->m.config_hash.value_or("");
    *out = new artamp_model{std::move(model)};
  });
}

ARTAMP_API int artamp_model_save(const artamp_model* model, const char* path) {
  return Guard([&] {
    Require(model, "model");
    Require(path, "path");
    artamp::SaveModel(model->m, path);
  });
}

ARTAMP_API int artamp_model_load(const char* path, artamp_model** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new artamp_model{artamp::LoadModel(path)};
  });
}

ARTAMP_API void artamp_model_free(artamp_model* model) { delete model; }

ARTAMP_API int artamp_model_score(const artamp_model* model,
                                  const artamp_manifest* manifest,
                                  size_t parallelism, const char* score_path) {
  return Guard([&] {
    Require(model, "model");
    Require(manifest, "manifest");
    Require(score_path, "score_path");
    const auto records = artamp::ScoreManifest(model->m, manifest->m.entries,
                                               parallelism ? parallelism : 1);
    std::optional<std::string> hash;
    if (!model->m.config_hash.empty()) hash = model->m.config_hash;
    if (manifest->m.config_hash && hash && *manifest->m.config_hash != *hash)
      throw Error(ErrorCode::kHashMismatch,
                  "model was trained on config " + *hash +
                      " but the manifest comes from " +
                      *manifest->m.config_hash);
    artamp::WriteScoreFile(score_path, records, hash);
  });
}

ARTAMP_API int artamp_sweep(const artamp_config* config,
                            const artamp_manifest* train,
                            const artamp_manifest* eval, const char* axis,
                            const char* const* values, size_t n_values,
                            const char* tdcf_path, char** csv,
                            size_t* failed_cells) {
  return Guard([&] {
    Require(config, "config");
    Require(train && eval, "manifest");
    Require(axis, "axis");
    Require(values || n_values == 0, "values");
    Require(tdcf_path, "tdcf_path");
    Require(csv, "out");
    const auto a = artamp::ParseSweepAxis(axis);
    if (!a)
      throw Error(ErrorCode::kConfig,
                  std::string("unknown sweep axis '") + axis + "'");
    std::vector<std::string> v;
    for (size_t i = 0; i < n_values; ++i) {
      Require(values[i], "value");
      v.emplace_back(values[i]);
    }
    config->c.Validate();
    const auto tdcf = artamp::LoadTdcfParams(tdcf_path);
    const auto rows = artamp::Sweep(config->c, train->m.entries,
                                    eval->m.entries, *a, v, tdcf);
    if (failed_cells) {
      *failed_cells = 0;
      for (const auto& r : rows)
        if (!r.result.ok) ++*failed_cells;
    }
    *csv = CopyString(artamp::SweepCsv(rows));
  });
}

ARTAMP_API void artamp_synth_spec_default(artamp_synth_spec* spec) {
  if (!spec) return;
  static const artamp::SynthSpec d;
  static const std::string prefix = d.id_prefix;
  spec->n_bonafide = d.n_bonafide;
  spec->n_spoof = d.n_spoof;
  spec->duration_s = d.duration_s;
  spec->sample_rate = d.sample_rate;
  spec->artifact_kind = artamp::ArtifactKindName(d.artifact_kind).data();
  spec->artifact_strength = d.artifact_strength;
  spec->seed = d.seed;
  spec->comb_delay = d.comb_delay;
  spec->id_prefix = prefix.c_str();
}

ARTAMP_API int artamp_synth_corpus(const artamp_synth_spec* spec,
                                   const char* out_dir, size_t* n_written) {
  return Guard([&] {
    Require(spec, "spec");
    Require(out_dir, "out_dir");
    Require(spec->artifact_kind, "artifact_kind");
    Require(spec->id_prefix, "id_prefix");
    artamp::SynthSpec s;
    s.n_bonafide = spec->n_bonafide;
    s.n_spoof = spec->n_spoof;
    s.duration_s = spec->duration_s;
    s.sample_rate = spec->sample_rate;
    const auto kind = artamp::ParseArtifactKind(spec->artifact_kind);
    if (!kind)
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown artifact kind '") +
                      spec->artifact_kind + "'");
    s.artifact_kind = *kind;
    s.artifact_strength = spec->artifact_strength;
    s.seed = spec->seed;
    s.comb_delay = spec->comb_delay;
    s.id_prefix = spec->id_prefix;
    const auto entries = artamp::SynthCorpus(s, out_dir);
    if (n_written) *n_written = entries.size();
  });
}

ARTAMP_API int artamp_report(const char* const* score_paths, size_t n_paths,
                             const artamp_manifest* manifest,
                             const char* tdcf_path, int flags, char** out,
                             size_t* extra) {
  return Guard([&] {
    Require(score_paths, "score_paths");
    Require(tdcf_path, "tdcf_path");
    Require(out, "out");
    if (n_paths == 0)
      throw Error(ErrorCode::kInvalidArgument, "no score files given");
    const bool flip = flags & ARTAMP_REPORT_FLIP_POLARITY;
    std::vector<artamp::ScoreRecord> records;
    std::optional<std::string> first_hash;
    std::string first_path;
    for (size_t i = 0; i < n_paths; ++i) {
      Require(score_paths[i], "score path");
      auto file = artamp::ReadScoreFile(score_paths[i], flip);
      if (file.config_hash) {
        if (!first_hash) {
          first_hash = file.config_hash;
          first_path = score_paths[i];
        } else if (*first_hash != *file.config_hash &&
                   !(flags & ARTAMP_REPORT_FORCE)) {
          throw Error(ErrorCode::kHashMismatch,
                      std::string("config hash ") + *file.config_hash +
                          " in " + score_paths[i] + " differs from " +
                          *first_hash + " in " + first_path);
        }
      }
      records.insert(records.end(), file.records.begin(), file.records.end());
    }
    if (manifest) {
      auto joined = artamp::JoinScores(manifest->m.entries, records);
      records = std::move(joined.records);
      if (extra) *extra = joined.extra;
    } else {
      std::unordered_set<std::string> seen;
      for (const auto& r : records)
        if (!seen.insert(r.utterance_id).second)
          throw Error(ErrorCode::kDuplicateId,
                      "duplicate score for " + r.utterance_id);
      if (extra) *extra = 0;
    }
    const auto params = artamp::LoadTdcfParams(tdcf_path);
    const auto report = artamp::MakeReport(records, params,
                                           flags & ARTAMP_REPORT_BY_ATTACK);
    *out = CopyString(flags & ARTAMP_REPORT_CSV ? report.Csv() : report.Text());
  });
}

}  // extern "C"
