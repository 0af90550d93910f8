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

/* C interface to the artamp library. Every function that can fail returns an
 * artamp_status; on failure artamp_last_error() describes the problem for the
 * calling thread. Objects are opaque and owned by the caller once returned;
 * release them with the matching _free function. Strings returned through a
 * char** are released with artamp_string_free. */

#ifndef ARTAMP_ARTAMP_H_
#define ARTAMP_ARTAMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ARTAMP_BUILDING_LIBRARY)
#define ARTAMP_API __attribute__((visibility("default")))
#else
#define ARTAMP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artamp_status {
  ARTAMP_OK = 0,
  ARTAMP_E_INVALID_ARGUMENT = 1,
  ARTAMP_E_FILE_NOT_FOUND = 2,
  ARTAMP_E_MALFORMED_HEADER = 3,
  ARTAMP_E_UNSUPPORTED_ENCODING = 4,
  ARTAMP_E_UNWRITABLE_PATH = 5,
  ARTAMP_E_LENGTH_MISMATCH = 6,
  ARTAMP_E_ZERO_ENERGY = 7,
  ARTAMP_E_OUT_OF_RANGE = 8,
  ARTAMP_E_DEGENERATE_INPUT = 9,
  ARTAMP_E_TOO_SHORT = 10,
  ARTAMP_E_MISSING_REFERENCE = 11,
  ARTAMP_E_PROCESS_FAILURE = 12,
  ARTAMP_E_TIMEOUT = 13,
  ARTAMP_E_MALFORMED_OUTPUT = 14,
  ARTAMP_E_PARSE = 15,
  ARTAMP_E_DUPLICATE_ID = 16,
  ARTAMP_E_UNKNOWN_KEY = 17,
  ARTAMP_E_MISSING_ID = 18,
  ARTAMP_E_SINGLE_CLASS = 19,
  ARTAMP_E_COEFFICIENT_DEGENERACY = 20,
  ARTAMP_E_DIMENSION_MISMATCH = 21,
  ARTAMP_E_MISSING_CLASS = 22,
  ARTAMP_E_CONFIG = 23,
  ARTAMP_E_HASH_MISMATCH = 24,
  ARTAMP_E_IO = 25,
  ARTAMP_E_INTERNAL = 99
} artamp_status;

typedef enum artamp_encoding {
  ARTAMP_PCM16 = 0,
  ARTAMP_FLOAT32 = 1
} artamp_encoding;

typedef struct artamp_waveform artamp_waveform;
typedef struct artamp_config artamp_config;
typedef struct artamp_manifest artamp_manifest;
typedef struct artamp_model artamp_model;

/* Errors and strings. */
ARTAMP_API const char* artamp_last_error(void);
ARTAMP_API const char* artamp_status_name(int status);
ARTAMP_API void artamp_string_free(char* s);

/* Waveforms. */
ARTAMP_API int artamp_waveform_create(const double* samples, size_t length,
                                      int sample_rate, artamp_waveform** out);
ARTAMP_API void artamp_waveform_free(artamp_waveform* w);
ARTAMP_API size_t artamp_waveform_length(const artamp_waveform* w);
ARTAMP_API int artamp_waveform_sample_rate(const artamp_waveform* w);
ARTAMP_API const double* artamp_waveform_data(const artamp_waveform* w);
ARTAMP_API int artamp_wav_read(const char* path, artamp_waveform** out);
ARTAMP_API int artamp_wav_write(const artamp_waveform* w, const char* path,
                                artamp_encoding encoding);
ARTAMP_API int artamp_crop_or_pad(const artamp_waveform* w, double seconds,
                                  uint64_t seed, artamp_waveform** out);
ARTAMP_API int artamp_measure_snr(const artamp_waveform* clean,
                                  const artamp_waveform* mixture,
                                  double* snr_db);

/* Noise and mixing. color is "white", "pink" or "violet". */
ARTAMP_API int artamp_noise_generate(const char* color, size_t length,
                                     int sample_rate, uint64_t seed,
                                     artamp_waveform** out);
ARTAMP_API int artamp_psd_slope(const artamp_waveform* w, double f_lo,
                                double f_hi, double* db_per_octave);
ARTAMP_API int artamp_add_noise(const artamp_waveform* x,
                                const artamp_waveform* noise, double snr_db,
                                artamp_waveform** out);
ARTAMP_API int artamp_wada_snr(const artamp_waveform* x, double* snr_db);

/* Enhancement, extraction and amplification. The enhancer settings come from
 * the config; reference may be NULL unless the enhancer is oracle_clean.
 * mode is "projection" or "naive". */
ARTAMP_API int artamp_enhance(const artamp_config* config,
                              const artamp_waveform* y,
                              const artamp_waveform* reference,
                              artamp_waveform** out);
ARTAMP_API int artamp_extract_residual(const artamp_waveform* x,
                                       const artamp_waveform* x_hat,
                                       const char* mode, artamp_waveform** out,
                                       double* projection_weight);
ARTAMP_API int artamp_amplify(const artamp_waveform* x,
                              const artamp_waveform* residual, double alpha,
                              artamp_waveform** out);
ARTAMP_API int artamp_process_utterance(const artamp_config* config,
                                        const artamp_waveform* x,
                                        uint64_t noise_seed,
                                        artamp_waveform** out,
                                        double* projection_weight);

/* Pipeline configuration. */
ARTAMP_API int artamp_config_create(artamp_config** out);
ARTAMP_API int artamp_config_load(const char* path, artamp_config** out);
ARTAMP_API void artamp_config_free(artamp_config* config);
ARTAMP_API int artamp_config_set(artamp_config* config, const char* key,
                                 const char* value);
ARTAMP_API int artamp_config_validate(const artamp_config* config);
ARTAMP_API int artamp_config_hash(const artamp_config* config, char** out);
ARTAMP_API int artamp_config_canonical(const artamp_config* config, char** out);

/* Manifests. format is "simple_tsv" or "asvspoof_protocol"; audio_root may be
 * NULL. The config hash is NULL when the manifest carries none. */
ARTAMP_API int artamp_manifest_load(const char* path, const char* format,
                                    const char* audio_root,
                                    artamp_manifest** out);
ARTAMP_API void artamp_manifest_free(artamp_manifest* manifest);
ARTAMP_API size_t artamp_manifest_size(const artamp_manifest* manifest);
ARTAMP_API const char* artamp_manifest_config_hash(
    const artamp_manifest* manifest);

/* Batch processing. Per-utterance failures are counted in *failed and do not
 * make the call fail. */
ARTAMP_API int artamp_run_pipeline(const artamp_config* config,
                                   const artamp_manifest* manifest,
                                   const char* out_dir, size_t* processed,
                                   size_t* failed);

/* Detector. Fitting copies the manifest's config hash into the model; scoring
 * writes "utterance_id attack_id label score" lines headed by that hash. */
ARTAMP_API int artamp_model_fit(const artamp_manifest* train,
                                size_t parallelism, artamp_model** out);
ARTAMP_API int artamp_model_save(const artamp_model* model, const char* path);
ARTAMP_API int artamp_model_load(const char* path, artamp_model** out);
ARTAMP_API void artamp_model_free(artamp_model* model);
ARTAMP_API int artamp_model_score(const artamp_model* model,
                                  const artamp_manifest* manifest,
                                  size_t parallelism, const char* score_path);

/* Sweep. axis is one of alpha, snr_db, noise_color, extraction_mode,
 * skip_noise_addition. Writes the CSV table to *csv. */
ARTAMP_API int artamp_sweep(const artamp_config* config,
                            const artamp_manifest* train,
                            const artamp_manifest* eval, const char* axis,
                            const char* const* values, size_t n_values,
                            const char* tdcf_path, char** csv,
                            size_t* failed_cells);

/* Synthetic corpus. */
typedef struct artamp_synth_spec {
  size_t n_bonafide;
  size_t n_spoof;
  double duration_s;
  int sample_rate;
  const char* artifact_kind; /* comb_filter, quantization or band_notch */
  double artifact_strength;
  uint64_t seed;
  size_t comb_delay;
  const char* id_prefix;
} artamp_synth_spec;

ARTAMP_API void artamp_synth_spec_default(artamp_synth_spec* spec);
ARTAMP_API int artamp_synth_corpus(const artamp_synth_spec* spec,
                                   const char* out_dir, size_t* n_written);

/* Reports. Score files are merged; differing config hashes are refused unless
 * ARTAMP_REPORT_FORCE is set. With a manifest, labels come from the manifest
 * and scored ids absent from it are counted in *extra. */
enum {
  ARTAMP_REPORT_CSV = 1,
  ARTAMP_REPORT_BY_ATTACK = 2,
  ARTAMP_REPORT_FORCE = 4,
  ARTAMP_REPORT_FLIP_POLARITY = 8
};

ARTAMP_API int artamp_report(const char* const* score_paths, size_t n_paths,
                             const artamp_manifest* manifest,
                             const char* tdcf_path, int flags, char** out,
                             size_t* extra);

#ifdef __cplusplus
}
#endif

#endif  /* ARTAMP_ARTAMP_H_ */
