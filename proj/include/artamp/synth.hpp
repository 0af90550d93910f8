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

#ifndef ARTAMP_SYNTH_HPP_
#define ARTAMP_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "artamp/manifest.hpp"
#include "artamp/waveform.hpp"

namespace artamp {

enum class ArtifactKind { kCombFilter, kQuantization, kBandNotch };

std::string_view ArtifactKindName(ArtifactKind kind);
std::optional<ArtifactKind> ParseArtifactKind(std::string_view name);

struct SynthSpec {
  std::size_t n_bonafide = 200;
  std::size_t n_spoof = 200;
  double duration_s = 4.0;
  int sample_rate = 16000;
  ArtifactKind artifact_kind = ArtifactKind::kCombFilter;
  double artifact_strength = 0.3;  // in (0, 1]
  std::uint64_t seed = 0;
  std::size_t comb_delay = 32;     // samples; ripple period sample_rate/delay
  std::string id_prefix = "synth";

  void Validate() const;
};

/// Harmonic-plus-noise pseudo-speech: a glottal pulse train with intonation
/// and vibrato shaped by three random formants, syllable-rate amplitude
/// modulation and a pink noise floor 30 dB down. Output RMS is 0.1.
Waveform PseudoSpeech(std::uint64_t seed, double duration_s, int sample_rate);

/// comb_filter: x[n] + strength * x[n - delay]. quantization: 2^(16 - 12 *
/// strength) amplitude levels. band_notch: zeroes a band of strength * 1 kHz
/// centred on 3 kHz; edge bins are scaled by the part of them left outside
/// the band. RMS is restored to the input's afterwards.
Waveform InjectArtifact(const Waveform& x, ArtifactKind kind, double strength,
                        std::size_t comb_delay);

/// Bona fide and spoof items for index i of the corpus.
Waveform SynthItem(const SynthSpec& spec, Label label, std::size_t index);

/// Writes <out_dir>/<prefix>_<label>_<index>.wav (float32) and
/// <out_dir>/manifest.tsv, and returns the manifest entries.
std::vector<ManifestEntry> SynthCorpus(const SynthSpec& spec,
                                       const std::filesystem::path& out_dir);

}  // namespace artamp

#endif  // ARTAMP_SYNTH_HPP_
