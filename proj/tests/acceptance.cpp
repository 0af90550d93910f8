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

// Acceptance checks. Run with a criterion number to check one, or with no
// arguments to check all; prints one PASS/FAIL line per criterion and exits
// non-zero if any failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "artamp/amplify.hpp"
#include "artamp/config.hpp"
#include "artamp/enhance.hpp"
#include "artamp/metrics.hpp"
#include "artamp/mixing.hpp"
#include "artamp/noise.hpp"
#include "artamp/pipeline.hpp"
#include "artamp/synth.hpp"
#include "artamp/waveform.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace artamp;
using artamp::testing::ReadFile;
using artamp::testing::TempDir;

namespace {

constexpr std::uint64_t kReleaseSeed = 2026;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

int Run(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("'") + ARTAMP_CLI_PATH + "' " + args +
                          " > '" + log.string() + "' 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome SnrExactness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> snr(-20.0, 40.0);
  std::uniform_int_distribution<std::size_t> len(1, 16000);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = len(rng);
    const Waveform x = artamp::testing::RandomWaveform(rng, n, 16000, scale(rng));
    const Waveform noise =
        artamp::testing::RandomWaveform(rng, n, 16000, scale(rng));
    const double s = snr(rng);
    worst = std::max(worst,
                     std::abs(MeasureSnr(x, AddNoiseAtSnr(x, noise, {s})) - s));
  }
  const double t = Seconds(start);
  return {worst <= 1e-6 && t < 5.0,
          "max |error| " + Fmt(worst) + " dB, " + Fmt(t, 3) + " s"};
}

Outcome Orthogonality() {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::size_t> len(1, 16000);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  double worst_dot = 0.0, worst_energy = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = len(rng);
    const Waveform x = artamp::testing::RandomWaveform(rng, n, 16000, scale(rng));
    // Half the pairs use a correlated estimate, as an enhancer would give.
    std::vector<double> v = artamp::testing::RandomVector(rng, n, scale(rng));
    if (i % 2)
      for (std::size_t k = 0; k < n; ++k) v[k] += 0.8 * x[k];
    const Waveform xh(std::move(v), 16000);
    const auto r = ExtractResidual(x, xh, ExtractionMode::kProjection);
    const double nx = std::sqrt(x.Energy()), nxh = std::sqrt(xh.Energy());
    worst_dot = std::max(worst_dot, std::abs(Dot(r.a_hat.samples(), xh.samples())) / (nx * nxh));
    const double w = r.projection_weight;
    worst_energy = std::max(
        worst_energy,
        std::abs(x.Energy() - (w * w * xh.Energy() + r.a_hat.Energy())) /
            x.Energy());
  }
  const double t = Seconds(start);
  return {worst_dot <= 1e-9 && worst_energy <= 1e-9 && t < 5.0,
          "max normalized dot " + Fmt(worst_dot) + ", max energy error " +
              Fmt(worst_energy) + ", " + Fmt(t, 3) + " s"};
}

Outcome OracleFixpoint() {
  double worst = 0.0;
  EnhancerKind oracle;
  oracle.tag = EnhancerTag::kOracleClean;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Waveform x = PseudoSpeech(seed, 4.0, 16000);
    for (double alpha : {0.0, 0.6, 1.4, 2.0}) {
      UtteranceConfig cfg;
      cfg.alpha = alpha;
      const auto p = ProcessUtterance(x, cfg, oracle, seed + 10);
      for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, std::abs(p.amplified[i] - x[i]));
    }
  }
  return {worst <= 1e-12, "max |difference| " + Fmt(worst)};
}

Outcome NoiseSlopes() {
  const std::size_t n = std::size_t{1} << 20;
  const std::map<NoiseColor, double> expected = {
      {NoiseColor::kWhite, 0.0}, {NoiseColor::kPink, -3.0},
      {NoiseColor::kViolet, 6.0}};
  bool ok = true;
  std::string detail;
  for (const auto& [color, target] : expected) {
    const double slope =
        PsdSlope(GenerateNoise({color, n, 16000, kReleaseSeed}), 100.0, 6000.0);
    ok &= std::abs(slope - target) <= 0.5;
    detail += std::string(NoiseColorName(color)) + " " + Fmt(slope, 4) + " ";
  }
  return {ok, detail + "dB/octave"};
}

Outcome MetricOracles() {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> size(2, 1000);
  const TdcfParams params = LoadTdcfParams(ARTAMP_DEFAULT_TDCF);
  const auto k = ComputeTdcfCoefficients(params);
  double worst_eer = 0.0, worst_tdcf = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    std::uniform_int_distribution<int> split(1, n - 1);
    const int nb = split(rng);
    // Alternate continuous scores with coarse, heavily tied ones.
    const bool tied = trial % 2 == 1;
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> shift(0.0, 3.0);
    const double d = shift(rng);
    std::vector<ScoreRecord> r;
    oracle::Scores s;
    for (int i = 0; i < n; ++i) {
      const bool bona = i < nb;
      double v = g(rng) + (bona ? d : 0.0);
      if (tied) v = std::round(v * 2.0) / 2.0;
      r.push_back({std::to_string(i), bona ? Label::kBonafide : Label::kSpoof,
                   "-", v});
      (bona ? s.bona : s.spoof).push_back(v);
    }
    worst_eer = std::max(worst_eer, std::abs(Eer(r) - oracle::Eer(s)));
    worst_tdcf = std::max(
        worst_tdcf,
        std::abs(MinTdcf(r, k) - oracle::MinNormalizedTdcf(s, k.c0, k.c1, k.c2)));
  }
  const std::vector<ScoreRecord> separated = {
      {"a", Label::kBonafide, "-", 0.9}, {"b", Label::kBonafide, "-", 0.8},
      {"c", Label::kSpoof, "-", 0.1}, {"d", Label::kSpoof, "-", 0.2}};
  const std::vector<ScoreRecord> four = {
      {"a", Label::kBonafide, "-", 0.8}, {"b", Label::kBonafide, "-", 0.4},
      {"c", Label::kSpoof, "-", 0.6}, {"d", Label::kSpoof, "-", 0.2}};
  const double sep = Eer(separated);
  const double hand = Eer(four);
  return {worst_eer <= 1e-12 && worst_tdcf <= 1e-12 && sep == 0.0 && hand == 0.25,
          "max eer error " + Fmt(worst_eer) + ", max t-DCF error " +
              Fmt(worst_tdcf) + ", separated " + Fmt(sep) + ", four-record " +
              Fmt(hand)};
}

Outcome DirectionalEffect() {
  const auto start = Clock::now();
  TempDir dir;
  SynthSpec spec;
  spec.n_bonafide = spec.n_spoof = 200;
  spec.artifact_kind = ArtifactKind::kCombFilter;
  spec.artifact_strength = 0.3;
  spec.seed = kReleaseSeed;
  spec.id_prefix = "train";
  const auto train = SynthCorpus(spec, dir / "train");
  spec.seed = kReleaseSeed + 1;
  spec.id_prefix = "eval";
  const auto eval = SynthCorpus(spec, dir / "eval");

  const TdcfParams tdcf = LoadTdcfParams(ARTAMP_DEFAULT_TDCF);
  PipelineConfig full;
  full.parallelism = 8;
  full.global_seed = kReleaseSeed;
  PipelineConfig naive = full;
  naive.extraction_mode = ExtractionMode::kNaive;
  const auto raw = EvaluateConfig(full, train, eval, tdcf, EvalInput::kRaw);
  const auto f = EvaluateConfig(full, train, eval, tdcf);
  const auto n = EvaluateConfig(naive, train, eval, tdcf);
  const double t = Seconds(start);
  if (!raw.ok || !f.ok || !n.ok)
    return {false, "evaluation failed: " + raw.message + f.message + n.message};
  const bool ok = f.eer <= raw.eer - 0.01 && f.eer <= n.eer - 0.01 && t < 120.0;
  return {ok, "eer raw " + Fmt(raw.eer, 4) + ", full " + Fmt(f.eer, 4) +
                  ", naive " + Fmt(n.eer, 4) + ", " + Fmt(t, 3) + " s"};
}

// Returns an empty string when the CSV has the header and exactly one
// well-formed row per expected value, in order.
std::string CheckSweepCsv(const std::string& csv, const std::string& axis,
                          const std::vector<std::string>& values) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) ||
      line != "axis,value,status,eer,min_tdcf,failed_utterances")
    return "bad header '" + line + "'";
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (row >= values.size()) return "extra row '" + line + "'";
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (f.size() != 6) return "wrong field count in '" + line + "'";
    if (f[0] != axis || f[1] != values[row]) return "unexpected cell '" + line + "'";
    if (f[2] != "ok") return "failed cell '" + line + "'";
    char* end = nullptr;
    const double eer = std::strtod(f[3].c_str(), &end);
    if (*end || !(eer >= 0.0 && eer <= 1.0)) return "bad eer '" + line + "'";
    const double tdcf = std::strtod(f[4].c_str(), &end);
    if (*end || !std::isfinite(tdcf) || tdcf < 0.0) return "bad t-DCF '" + line + "'";
    if (f[5] != "0") return "failures in '" + line + "'";
    ++row;
  }
  if (row != values.size()) return "missing rows";
  return {};
}

Outcome SweepGrid() {
  TempDir dir;
  const std::string common = " --n-bonafide 20 --n-spoof 20 --duration 1.5";
  if (Run("synth -o '" + (dir / "train").string() + "' --seed 1 --prefix tr" +
              common,
          dir / "synth1.log") != 0 ||
      Run("synth -o '" + (dir / "eval").string() + "' --seed 2 --prefix ev" +
              common,
          dir / "synth2.log") != 0)
    return {false, "synth failed: " + ReadFile(dir / "synth1.log") +
                       ReadFile(dir / "synth2.log")};
  const std::vector<std::pair<std::string, std::vector<std::string>>> grid = {
      {"snr_db", {"-5", "0", "5", "10"}},
      {"noise_color", {"white", "pink", "violet"}},
      {"skip_noise_addition", {"on", "off"}}};
  std::string detail;
  for (const auto& [axis, values] : grid) {
    std::string joined;
    for (const auto& v : values) joined += (joined.empty() ? "" : ",") + v;
    const fs::path csv = dir / (axis + ".csv");
    const int rc = Run("sweep --train '" + (dir / "train" / "manifest.tsv").string() +
                           "' --eval '" + (dir / "eval" / "manifest.tsv").string() +
                           "' --axis " + axis + " --values=" + joined +
                           " --set crop_seconds=1.5 -j 8 -o '" + csv.string() + "'",
                       dir / "sweep.log");
    if (rc != 0)
      return {false, axis + ": exit " + std::to_string(rc) + ": " +
                         ReadFile(dir / "sweep.log")};
    const std::string problem = CheckSweepCsv(ReadFile(csv), axis, values);
    if (!problem.empty()) return {false, axis + ": " + problem};
    detail += axis + " " + std::to_string(values.size()) + " rows; ";
  }
  return {true, detail};
}

std::map<std::string, std::string> DirectoryContents(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    files[e.path().filename().string()] = ReadFile(e.path());
  return files;
}

Outcome Determinism() {
  TempDir dir;
  if (Run("synth -o '" + (dir / "in").string() +
              "' --n-bonafide 8 --n-spoof 8 --duration 5 --seed 3",
          dir / "synth.log") != 0)
    return {false, "synth failed: " + ReadFile(dir / "synth.log")};
  artamp::testing::WriteFile(dir / "run.conf",
                             "global_seed = 77\nsnr_db = 0\nalpha = 1.4\n");
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* jobs : {"1", "8", "1", "8"}) {
    const fs::path out = dir / ("out" + std::to_string(runs.size()));
    const int rc = Run("process --config '" + (dir / "run.conf").string() +
                           "' --manifest '" + (dir / "in" / "manifest.tsv").string() +
                           "' -o '" + out.string() + "' -j " + jobs,
                       dir / "process.log");
    if (rc != 0)
      return {false, "process exit " + std::to_string(rc) + ": " +
                         ReadFile(dir / "process.log")};
    runs.push_back(DirectoryContents(out));
  }
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i] != runs[0])
      return {false, "run " + std::to_string(i) + " differs from run 0"};
  return {runs[0].size() == 18,
          std::to_string(runs[0].size()) + " files identical over 4 runs "
          "(parallelism 1, 8, 1, 8)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"snr mixing exactness", SnrExactness},
      {"projection orthogonality and energy split", Orthogonality},
      {"perfect-enhancer fixpoint", OracleFixpoint},
      {"noise colour slopes", NoiseSlopes},
      {"metric oracles", MetricOracles},
      {"end-to-end directional effect", DirectionalEffect},
      {"ablation grid structure", SweepGrid},
      {"run determinism", Determinism}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto& [name, fn] = criteria[id - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::printf("criterion %d [%s] %s: %s\n", id, o.pass ? "PASS" : "FAIL",
                name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
