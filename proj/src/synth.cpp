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

#include "artamp/synth.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "artamp/error.hpp"
#include "artamp/noise.hpp"
#include "artamp/seed.hpp"
#include "artamp/wav_io.hpp"
#include "fft.hpp"

namespace artamp {
namespace {

constexpr double kTargetRms = 0.1;
constexpr double kNoiseFloorRatio = 0.0316;  // -30 dB
constexpr double kNotchCentreHz = 3000.0;
constexpr double kNotchMaxWidthHz = 1000.0;

Waveform ScaleToRms(std::vector<double> v, int rate, double target) {
  double e = 0.0;
  for (double s : v) e += s * s;
  const double rms = std::sqrt(e / static_cast<double>(v.size()));
  if (rms > 0.0)
    for (double& s : v) s *= target / rms;
  return Waveform(std::move(v), rate);
}

double FormantGain(double f, const double (&centre)[3], const double (&width)[3]) {
  double g = 0.05;
  for (int i = 0; i < 3; ++i) {
    const double d = (f - centre[i]) / width[i];
    g += std::exp(-0.5 * d * d) / (1.0 + i);
  }
  return g;
}

}  // namespace

std::string_view ArtifactKindName(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kCombFilter: return "comb_filter";
    case ArtifactKind::kQuantization: return "quantization";
    case ArtifactKind::kBandNotch: return "band_notch";
  }
  return "comb_filter";
}

std::optional<ArtifactKind> ParseArtifactKind(std::string_view name) {
  if (name == "comb_filter") return ArtifactKind::kCombFilter;
  if (name == "quantization") return ArtifactKind::kQuantization;
  if (name == "band_notch") return ArtifactKind::kBandNotch;
  return std::nullopt;
}

void SynthSpec::Validate() const {
  if (n_bonafide < 1 || n_spoof < 1)
    throw Error(ErrorCode::kInvalidArgument, "synth: counts must be >= 1");
  if (!(duration_s > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "synth: duration must be positive");
  if (sample_rate < 8000)
    throw Error(ErrorCode::kInvalidArgument, "synth: sample rate must be >= 8 kHz");
  if (!(artifact_strength > 0.0 && artifact_strength <= 1.0))
    throw Error(ErrorCode::kInvalidArgument,
                "synth: artifact strength must lie in (0, 1]");
  if (comb_delay < 1)
    throw Error(ErrorCode::kInvalidArgument, "synth: comb delay must be >= 1");
}

Waveform PseudoSpeech(std::uint64_t seed, double duration_s, int sample_rate) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };

  const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  const double fs = sample_rate;
  const double f0 = uniform(90.0, 220.0);
  const double vib_rate = uniform(3.0, 6.0);
  const double vib_depth = uniform(0.01, 0.04);
  const double vib_phase = uniform(0.0, 2.0 * std::numbers::pi);
  const double tone_rate = uniform(1.0, 2.5);
  const double tone_depth = uniform(0.10, 0.25);  // octaves
  const double tone_phase = uniform(0.0, 2.0 * std::numbers::pi);
  const double am_rate = uniform(2.0, 5.0);
  const double am_phase = uniform(0.0, 2.0 * std::numbers::pi);
  const double centre[3] = {uniform(300, 900), uniform(900, 2500),
                            uniform(2500, 3800)};
  const double width[3] = {uniform(80, 200), uniform(120, 300), uniform(200, 500)};

  const double f_top = f0 * std::exp2(tone_depth) * (1.0 + vib_depth);
  std::size_t harmonics = 0;
  while ((harmonics + 1) * f_top < 0.47 * fs) ++harmonics;
  std::vector<double> amp(harmonics), cos_phi(harmonics), sin_phi(harmonics);
  for (std::size_t k = 0; k < harmonics; ++k) {
    const double fk = (k + 1) * f0;
    amp[k] = FormantGain(fk, centre, width) / std::sqrt(k + 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    cos_phi[k] = std::cos(phi);
    sin_phi[k] = std::sin(phi);
  }

  std::vector<double> out(n);
  double phase = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = i / fs;
    const double intonation = std::exp2(
        tone_depth * std::sin(2.0 * std::numbers::pi * tone_rate * t + tone_phase));
    const double inst_f0 =
        f0 * intonation *
        (1.0 + vib_depth * std::sin(2.0 * std::numbers::pi * vib_rate * t + vib_phase));
    phase += 2.0 * std::numbers::pi * inst_f0 / fs;
    // sin/cos of k*phase by the Chebyshev recurrence.
    const double c1 = std::cos(phase), s1 = std::sin(phase);
    double c_prev = 1.0, s_prev = 0.0, c_k = c1, s_k = s1;
    double v = 0.0;
    for (std::size_t k = 0; k < harmonics; ++k) {
      v += amp[k] * (s_k * cos_phi[k] + c_k * sin_phi[k]);
      const double c_next = 2.0 * c1 * c_k - c_prev;
      const double s_next = 2.0 * c1 * s_k - s_prev;
      c_prev = c_k;
      s_prev = s_k;
      c_k = c_next;
      s_k = s_next;
    }
    const double env =
        0.55 + 0.45 * std::sin(2.0 * std::numbers::pi * am_rate * t + am_phase);
    out[i] = v * std::max(env, 0.05);
  }
  Waveform voiced = ScaleToRms(std::move(out), sample_rate, kTargetRms);

  const Waveform floor =
      GenerateNoise({NoiseColor::kPink, n, sample_rate, SplitMix64(seed ^ 0x5EEDull)});
  std::vector<double> mixed(n);
  for (std::size_t i = 0; i < n; ++i)
    mixed[i] = voiced[i] + kNoiseFloorRatio * kTargetRms * floor[i];
  return ScaleToRms(std::move(mixed), sample_rate, kTargetRms);
}

Waveform InjectArtifact(const Waveform& x, ArtifactKind kind, double strength,
                        std::size_t comb_delay) {
  const auto in = x.samples();
  std::vector<double> out(in.begin(), in.end());
  switch (kind) {
    case ArtifactKind::kCombFilter:
      for (std::size_t i = comb_delay; i < out.size(); ++i)
        out[i] += strength * in[i - comb_delay];
      break;
    case ArtifactKind::kQuantization: {
      double peak = 0.0;
      for (double v : in) peak = std::max(peak, std::abs(v));
      if (peak <= 0.0) break;
      const double half_levels = std::exp2(16.0 - 12.0 * strength) / 2.0;
      for (double& v : out) v = std::round(v / peak * half_levels) / half_levels * peak;
      break;
    }
    case ArtifactKind::kBandNotch: {
      internal::RealFft fft(out.size());
      std::vector<std::complex<double>> spec(fft.bins());
      fft.Forward(out, spec);
      const double bin_hz = static_cast<double>(x.sample_rate()) / out.size();
      const double half = strength * kNotchMaxWidthHz / 2.0;
      // Each bin loses the fraction of its width that falls in the notch.
      for (std::size_t k = 0; k < spec.size(); ++k) {
        const double f = k * bin_hz;
        const double lo = std::max(f - bin_hz / 2.0, kNotchCentreHz - half);
        const double hi = std::min(f + bin_hz / 2.0, kNotchCentreHz + half);
        if (hi > lo) spec[k] *= 1.0 - (hi - lo) / bin_hz;
      }
      fft.Inverse(spec, out);
      break;
    }
  }
  return ScaleToRms(std::move(out), x.sample_rate(), x.Rms());
}

Waveform SynthItem(const SynthSpec& spec, Label label, std::size_t index) {
  const std::uint64_t stream = label == Label::kBonafide ? 0xB0ull : 0x5Full;
  const std::uint64_t item_seed = SplitMix64(SplitMix64(spec.seed ^ stream) + index);
  Waveform base = PseudoSpeech(item_seed, spec.duration_s, spec.sample_rate);
  if (label == Label::kBonafide) return base;
  return InjectArtifact(base, spec.artifact_kind, spec.artifact_strength,
                        spec.comb_delay);
}

std::vector<ManifestEntry> SynthCorpus(const SynthSpec& spec,
                                       const std::filesystem::path& out_dir) {
  spec.Validate();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::is_directory(out_dir))
    throw Error(ErrorCode::kUnwritablePath,
                "cannot create output directory " + out_dir.string());

  std::vector<ManifestEntry> entries;
  for (Label label : {Label::kBonafide, Label::kSpoof}) {
    const std::size_t count =
        label == Label::kBonafide ? spec.n_bonafide : spec.n_spoof;
    for (std::size_t i = 0; i < count; ++i) {
      char name[64];
      std::snprintf(name, sizeof(name), "_%s_%04zu",
                    std::string(LabelName(label)).c_str(), i);
      ManifestEntry e;
      e.utterance_id = spec.id_prefix + name;
      e.path = out_dir / (e.utterance_id + ".wav");
      e.label = label;
      e.attack_id = label == Label::kBonafide
                        ? "-"
                        : std::string(ArtifactKindName(spec.artifact_kind));
      WriteWav(SynthItem(spec, label, i), e.path, WavEncoding::kFloat32);
      entries.push_back(std::move(e));
    }
  }
  WriteManifest(out_dir / "manifest.tsv", entries);
  return entries;
}

}  // namespace artamp
