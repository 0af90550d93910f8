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

#include "artamp/detector.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "artamp/error.hpp"
#include "text_util.hpp"

namespace artamp {
namespace {

constexpr double kLogFloor = 1e-10;
constexpr const char* kModelMagic = "artamp-gaussian-model";
constexpr int kModelVersion = 1;

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Triangular filters with edges equally spaced on the mel scale, 0 Hz to
// Nyquist. Row-major [band][bin].
std::vector<double> MelFilterbank(std::size_t n_bands, std::size_t bins,
                                  int sample_rate) {
  const double nyquist = sample_rate / 2.0;
  const double mel_max = HzToMel(nyquist);
  std::vector<double> edges(n_bands + 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i] = MelToHz(mel_max * static_cast<double>(i) /
                       static_cast<double>(n_bands + 1));
  const double bin_hz = nyquist / static_cast<double>(bins - 1);
  std::vector<double> fb(n_bands * bins, 0.0);
  for (std::size_t b = 0; b < n_bands; ++b) {
    const double lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f <= mid)
        w = (f - lo) / (mid - lo);
      else if (f > mid && f < hi)
        w = (hi - f) / (hi - mid);
      fb[b * bins + k] = w;
    }
  }
  return fb;
}

}  // namespace

FeatureVector ExtractFeatures(const Waveform& w, const FeatureConfig& config) {
  config.stft.Validate();
  if (config.n_bands == 0)
    throw Error(ErrorCode::kInvalidArgument, "need at least one mel band");
  if (w.size() < config.stft.window_length)
    throw Error(ErrorCode::kTooShort,
                "signal shorter than one analysis window (" +
                    std::to_string(w.size()) + " < " +
                    std::to_string(config.stft.window_length) + " samples)");

  const Spectrogram spec = Stft(w.samples(), config.stft);
  const std::size_t bins = spec.bins;
  const std::vector<double> fb = MelFilterbank(config.n_bands, bins, w.sample_rate());
  const double bin_hz = w.sample_rate() / 2.0 / static_cast<double>(bins - 1);

  std::vector<double> sum(config.n_bands, 0.0), sum_sq(config.n_bands, 0.0);
  std::vector<double> power(bins);
  double flatness_sum = 0.0, high = 0.0, low = 0.0;
  for (std::size_t f = 0; f < spec.frames; ++f) {
    for (std::size_t k = 0; k < bins; ++k) power[k] = std::norm(spec.at(f, k));
    for (std::size_t b = 0; b < config.n_bands; ++b) {
      double e = 0.0;
      for (std::size_t k = 0; k < bins; ++k) e += fb[b * bins + k] * power[k];
      const double le = std::log(e + kLogFloor);
      sum[b] += le;
      sum_sq[b] += le * le;
    }
    double log_mean = 0.0, mean = 0.0;
    for (std::size_t k = 1; k < bins; ++k) {
      log_mean += std::log(power[k] + kLogFloor);
      mean += power[k];
      (k * bin_hz >= config.split_hz ? high : low) += power[k];
    }
    const double m = static_cast<double>(bins - 1);
    flatness_sum += std::exp(log_mean / m) / (mean / m + kLogFloor);
  }

  const double frames = static_cast<double>(spec.frames);
  FeatureVector out;
  out.reserve(config.dimension());
  for (std::size_t b = 0; b < config.n_bands; ++b) out.push_back(sum[b] / frames);
  for (std::size_t b = 0; b < config.n_bands; ++b) {
    const double mean = sum[b] / frames;
    out.push_back(std::max(0.0, sum_sq[b] / frames - mean * mean));
  }
  out.push_back(flatness_sum / frames);
  out.push_back(high / (low + kLogFloor));
  return out;
}

GaussianModel FitGaussian(std::span<const LabeledFeatures> data,
                          const FeatureConfig& feature_config) {
  std::array<std::vector<FeatureVector>, 2> by_class;
  std::size_t dim = 0;
  for (const LabeledFeatures& d : data) {
    if (dim == 0) dim = d.features.size();
    if (d.features.size() != dim || dim == 0)
      throw Error(ErrorCode::kDimensionMismatch,
                  "training vectors differ in dimension");
    by_class[d.label == Label::kBonafide ? 0 : 1].push_back(d.features);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 2)
      throw Error(ErrorCode::kMissingClass,
                  std::string("need at least two ") +
                      (c == 0 ? "bona fide" : "spoof") + " training examples");
  }

  GaussianModel model;
  model.feature_config = feature_config;
  const double total = static_cast<double>(by_class[0].size() + by_class[1].size());
  for (int c = 0; c < 2; ++c) {
    // Canonical order makes the floating-point sums order independent.
    std::vector<FeatureVector>& rows = by_class[c];
    std::sort(rows.begin(), rows.end());
    const double n = static_cast<double>(rows.size());
    std::vector<double> mean(dim, 0.0), var(dim, 0.0);
    for (const FeatureVector& r : rows)
      for (std::size_t i = 0; i < dim; ++i) mean[i] += r[i];
    for (double& m : mean) m /= n;
    for (const FeatureVector& r : rows)
      for (std::size_t i = 0; i < dim; ++i) {
        const double d = r[i] - mean[i];
        var[i] += d * d;
      }
    for (double& v : var) v = std::max(v / (n - 1.0), kVarianceFloor);
    model.mean[c] = std::move(mean);
    model.variance[c] = std::move(var);
    model.prior[c] = n / total;
  }
  return model;
}

double ScoreFeatures(const GaussianModel& model, const FeatureVector& f) {
  if (f.size() != model.dimension())
    throw Error(ErrorCode::kDimensionMismatch,
                "feature dimension " + std::to_string(f.size()) +
                    " does not match model dimension " +
                    std::to_string(model.dimension()));
  double llr = std::log(model.prior[0]) - std::log(model.prior[1]);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int c = 0; c < 2; ++c) {
      const double v = model.variance[c][i];
      const double d = f[i] - model.mean[c][i];
      const double ll = -0.5 * (std::log(2.0 * std::numbers::pi * v) + d * d / v);
      llr += c == 0 ? ll : -ll;
    }
  }
  return llr;
}

void SaveModel(const GaussianModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "cannot write " + path.string());
  const auto row = [&](const char* key, const char* cls,
                       const std::vector<double>& v) {
    out << key << ' ' << cls;
    for (double x : v) out << ' ' << internal::FormatDouble(x);
    out << '\n';
  };
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "n_bands " << model.feature_config.n_bands << '\n';
  out << "split_hz " << internal::FormatDouble(model.feature_config.split_hz) << '\n';
  out << "window_length " << model.feature_config.stft.window_length << '\n';
  out << "hop " << model.feature_config.stft.hop << '\n';
  out << "dimension " << model.dimension() << '\n';
  if (!model.config_hash.empty())
    out << "config_hash " << model.config_hash << '\n';
  out << "prior bonafide " << internal::FormatDouble(model.prior[0]) << '\n';
  out << "prior spoof " << internal::FormatDouble(model.prior[1]) << '\n';
  row("mean", "bonafide", model.mean[0]);
  row("variance", "bonafide", model.variance[0]);
  row("mean", "spoof", model.mean[1]);
  row("variance", "spoof", model.variance[1]);
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "write failed: " + path.string());
}

GaussianModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  GaussianModel model;
  std::string line;
  std::size_t line_no = 0, dim = 0;
  bool header = false;
  const auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::kParse,
                 path.string() + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = internal::SplitWhitespace(line);
    if (f.empty()) continue;
    if (!header) {
      if (f.size() != 2 || f[0] != kModelMagic)
        throw fail("not an artamp model file");
      if (internal::ParseInt(f[1]) != kModelVersion)
        throw fail("unsupported model version " + std::string(f[1]));
      header = true;
      continue;
    }
    const auto num = [&](std::string_view s) {
      const auto v = internal::ParseDouble(s);
      if (!v) throw fail("bad number '" + std::string(s) + "'");
      return *v;
    };
    const auto count = [&](std::string_view s) {
      const auto v = internal::ParseUint(s);
      if (!v) throw fail("bad count '" + std::string(s) + "'");
      return static_cast<std::size_t>(*v);
    };
    if (f[0] == "n_bands" && f.size() == 2) {
      model.feature_config.n_bands = count(f[1]);
    } else if (f[0] == "config_hash" && f.size() == 2) {
      model.config_hash = std::string(f[1]);
    } else if (f[0] == "split_hz" && f.size() == 2) {
      model.feature_config.split_hz = num(f[1]);
    } else if (f[0] == "window_length" && f.size() == 2) {
      model.feature_config.stft.window_length = count(f[1]);
    } else if (f[0] == "hop" && f.size() == 2) {
      model.feature_config.stft.hop = count(f[1]);
    } else if (f[0] == "dimension" && f.size() == 2) {
      dim = count(f[1]);
    } else if ((f[0] == "prior" || f[0] == "mean" || f[0] == "variance") &&
               f.size() >= 3) {
      const auto label = ParseLabel(f[1]);
      if (!label) throw fail("unknown class '" + std::string(f[1]) + "'");
      const int c = *label == Label::kBonafide ? 0 : 1;
      if (f[0] == "prior") {
        if (f.size() != 3) throw fail("prior takes one value");
        model.prior[c] = num(f[2]);
      } else {
        std::vector<double> v;
        for (std::size_t i = 2; i < f.size(); ++i) v.push_back(num(f[i]));
        if (v.size() != dim) throw fail("row length does not match dimension");
        (f[0] == "mean" ? model.mean : model.variance)[c] = std::move(v);
      }
    } else {
      throw fail("unrecognised line");
    }
  }
  if (!header) throw Error(ErrorCode::kParse, path.string() + ": empty model file");
  for (int c = 0; c < 2; ++c) {
    if (model.mean[c].size() != dim || model.variance[c].size() != dim || dim == 0)
      throw Error(ErrorCode::kParse, path.string() + ": incomplete model");
    for (double v : model.variance[c])
      if (!(v > 0.0))
        throw Error(ErrorCode::kParse, path.string() + ": non-positive variance");
  }
  if (dim != model.feature_config.dimension())
    throw Error(ErrorCode::kParse,
                path.string() + ": dimension does not match feature config");
  return model;
}

}  // namespace artamp
