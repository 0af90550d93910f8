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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "artamp/config.hpp"
#include "artamp/error.hpp"
#include "artamp/manifest.hpp"
#include "artamp/pipeline.hpp"
#include "artamp/seed.hpp"
#include "artamp/synth.hpp"
#include "artamp/wav_io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace artamp;
using artamp::testing::ReadFile;
using artamp::testing::TempDir;
using artamp::testing::WriteFile;

namespace {

std::string Message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

std::vector<ManifestEntry> SmallCorpus(const std::filesystem::path& dir,
                                       std::size_t per_class,
                                       std::uint64_t seed = 1,
                                       const std::string& prefix = "c") {
  SynthSpec s;
  s.n_bonafide = s.n_spoof = per_class;
  s.duration_s = 1.0;
  s.seed = seed;
  s.id_prefix = prefix;
  return SynthCorpus(s, dir);
}

PipelineConfig FastConfig() {
  PipelineConfig c;
  c.crop_seconds = 0.75;
  return c;
}

TdcfParams DefaultTdcf() { return LoadTdcfParams(ARTAMP_DEFAULT_TDCF); }

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("protocol lines parse with audio under the root") {
  TempDir dir;
  WriteFile(dir / "p.txt", "LA_0079 LA_T_1138215 - - bonafide\n"
                           "LA_0080 LA_T_2000000 - A07 spoof\n");
  WriteFile(dir / "LA_T_2000000.flac", "");
  const auto m = LoadManifest(dir / "p.txt", ManifestFormat::kAsvspoofProtocol,
                              dir / "audio");
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].utterance_id == "LA_T_1138215");
  CHECK(m.entries[0].label == Label::kBonafide);
  CHECK(m.entries[0].attack_id == "-");
  CHECK(m.entries[0].path == dir / "audio" / "LA_T_1138215.wav");
  CHECK(m.entries[1].attack_id == "A07");
  CHECK(m.entries[1].label == Label::kSpoof);
}

TEST_CASE("protocol audio probe prefers wav over flac") {
  TempDir dir;
  WriteFile(dir / "p.txt", "S1 U1 - - bonafide\nS1 U2 - - bonafide\n");
  WriteFile(dir / "U1.wav", "");
  WriteFile(dir / "U1.flac", "");
  WriteFile(dir / "U2.flac", "");
  const auto m =
      LoadManifest(dir / "p.txt", ManifestFormat::kAsvspoofProtocol, dir.path());
  CHECK(m.entries[0].path == dir / "U1.wav");
  CHECK(m.entries[1].path == dir / "U2.flac");
}

TEST_CASE("duplicate ids cite both lines") {
  TempDir dir;
  WriteFile(dir / "m.tsv",
            "# header\n"
            "a\ta.wav\tbonafide\t-\n"
            "dup\tb.wav\tbonafide\t-\n"
            "c\tc.wav\tspoof\tA01\n"
            "d\td.wav\tspoof\tA01\n"
            "e\te.wav\tspoof\tA01\n"
            "dup\tf.wav\tspoof\tA01\n");
  const auto fn = [&] { LoadManifest(dir / "m.tsv", ManifestFormat::kSimpleTsv); };
  CHECK(CodeOf(fn) == ErrorCode::kDuplicateId);
  const std::string msg = Message(fn);
  CHECK(msg.find('3') != std::string::npos);
  CHECK(msg.find('7') != std::string::npos);
}

TEST_CASE("empty manifests are empty") {
  TempDir dir;
  WriteFile(dir / "m.tsv", "");
  CHECK(LoadManifest(dir / "m.tsv", ManifestFormat::kSimpleTsv).entries.empty());
}

TEST_CASE("bad keys and malformed lines are reported") {
  TempDir dir;
  WriteFile(dir / "k.tsv", "a\ta.wav\tgenuine\t-\n");
  CHECK(CodeOf([&] { LoadManifest(dir / "k.tsv", ManifestFormat::kSimpleTsv); }) ==
        ErrorCode::kUnknownKey);
  WriteFile(dir / "p.txt", "S1 U1 - - bonafide\nS1 U2 -\n");
  const auto fn = [&] {
    LoadManifest(dir / "p.txt", ManifestFormat::kAsvspoofProtocol, dir.path());
  };
  CHECK(CodeOf(fn) == ErrorCode::kParse);
  CHECK(Message(fn).find(":2") != std::string::npos);
}

TEST_CASE("relative tsv paths resolve against the manifest") {
  TempDir dir;
  std::filesystem::create_directories(dir / "sub");
  WriteFile(dir / "sub" / "m.tsv", "a\taudio/a.wav\tbonafide\t-\n");
  const auto m = LoadManifest(dir / "sub" / "m.tsv", ManifestFormat::kSimpleTsv);
  CHECK(m.entries[0].path == dir / "sub" / "audio" / "a.wav");
}

TEST_CASE("config keys set and validate") {
  PipelineConfig c;
  SetConfigValue(&c, "snr_db", "-5");
  SetConfigValue(&c, "noise_color", "violet");
  SetConfigValue(&c, "enhancer", "spectral_subtraction");
  SetConfigValue(&c, "alpha", "0.6");
  SetConfigValue(&c, "extraction_mode", "naive");
  SetConfigValue(&c, "skip_noise_addition", "true");
  SetConfigValue(&c, "parallelism", "8");
  CHECK(c.snr_db == -5.0);
  CHECK(c.noise_color == NoiseColor::kViolet);
  CHECK(c.enhancer.tag == EnhancerTag::kSpectralSubtraction);
  CHECK(c.alpha == 0.6);
  CHECK(c.extraction_mode == ExtractionMode::kNaive);
  CHECK(c.skip_noise_addition);
  CHECK(c.parallelism == 8);
  CHECK_THROWS_AS(SetConfigValue(&c, "nope", "1"), Error);
  CHECK_THROWS_AS(SetConfigValue(&c, "alpha", "abc"), Error);
  PipelineConfig bad;
  bad.crop_seconds = 0.0;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = PipelineConfig{};
  bad.parallelism = 0;
  CHECK_THROWS_AS(bad.Validate(), Error);
}

TEST_CASE("config files load and hash ignores parallelism") {
  TempDir dir;
  WriteFile(dir / "c.conf", "# comment\nsnr_db = 5\nparallelism = 4\n");
  const auto c = LoadConfig(dir / "c.conf");
  CHECK(c.snr_db == 5.0);
  CHECK(c.parallelism == 4);
  PipelineConfig d = c;
  d.parallelism = 1;
  CHECK(ConfigHash(c) == ConfigHash(d));
  d.alpha = 1.0;
  CHECK(ConfigHash(c) != ConfigHash(d));
  CHECK(ConfigHash(c).size() == 16);
  WriteFile(dir / "bad.conf", "snr = 5\n");
  CHECK_THROWS_AS(LoadConfig(dir / "bad.conf"), Error);
}

TEST_CASE("utterance seeds depend only on seed and id") {
  const auto a = DeriveUtteranceSeeds(7, "utt1");
  const auto b = DeriveUtteranceSeeds(7, "utt1");
  const auto c = DeriveUtteranceSeeds(8, "utt1");
  const auto d = DeriveUtteranceSeeds(7, "utt2");
  CHECK(a.crop == b.crop);
  CHECK(a.noise == b.noise);
  CHECK(a.noise != c.noise);
  CHECK(a.noise != d.noise);
  CHECK(a.crop != a.noise);
  CHECK(Fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("oracle enhancer reproduces cropped inputs") {
  TempDir in, out;
  const auto corpus = SmallCorpus(in.path(), 2);
  PipelineConfig c = FastConfig();
  c.enhancer.tag = EnhancerTag::kOracleClean;
  const auto summary = RunPipeline(c, corpus, out.path());
  CHECK(summary.failed == 0);
  CHECK(summary.processed == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Waveform expected = LoadCropped(c, corpus[i]);
    const Waveform got = ReadWav(out / (corpus[i].utterance_id + ".wav"));
    for (std::size_t k = 0; k < got.size(); ++k)
      CHECK(got[k] == static_cast<double>(static_cast<float>(expected[k])));
    CHECK(summary.log[i].residual_energy == 0.0);
  }
}

TEST_CASE("output is identical across worker counts") {
  TempDir in, out1, out8;
  const auto corpus = SmallCorpus(in.path(), 4);
  PipelineConfig c = FastConfig();
  c.parallelism = 1;
  RunPipeline(c, corpus, out1.path());
  c.parallelism = 8;
  RunPipeline(c, corpus, out8.path());
  for (const auto& e : corpus) {
    const std::string name = e.utterance_id + ".wav";
    CHECK(ReadFile(out1 / name) == ReadFile(out8 / name));
  }
  CHECK(ReadFile(out1 / "run_log.tsv") == ReadFile(out8 / "run_log.tsv"));
  CHECK(ReadFile(out1 / "manifest.tsv") == ReadFile(out8 / "manifest.tsv"));
}

TEST_CASE("a missing file fails only its utterance") {
  TempDir in, out;
  auto corpus = SmallCorpus(in.path(), 5);
  std::filesystem::remove(corpus[3].path);
  const auto summary = RunPipeline(FastConfig(), corpus, out.path());
  CHECK(summary.processed == 9);
  CHECK(summary.failed == 1);
  CHECK_FALSE(summary.log[3].ok);
  CHECK_FALSE(std::filesystem::exists(out / (corpus[3].utterance_id + ".wav")));
  const auto written = LoadManifest(out / "manifest.tsv", ManifestFormat::kSimpleTsv);
  CHECK(written.entries.size() == 9);
  REQUIRE(written.config_hash.has_value());
  CHECK(*written.config_hash == summary.config_hash);
}

TEST_CASE("run log records the energy identity") {
  TempDir in, out;
  const auto corpus = SmallCorpus(in.path(), 2);
  const auto summary = RunPipeline(FastConfig(), corpus, out.path());
  for (const auto& l : summary.log) {
    REQUIRE(l.ok);
    const double w = l.projection_weight;
    CHECK(std::abs(l.input_energy - (w * w * l.enhanced_energy + l.residual_energy)) <=
          1e-9 * l.input_energy);
    const auto seeds = DeriveUtteranceSeeds(0, l.utterance_id);
    CHECK(l.crop_seed == seeds.crop);
    CHECK(l.noise_seed == seeds.noise);
  }
  const std::string log = ReadFile(out / "run_log.tsv");
  CHECK(log.find("config_hash=" + summary.config_hash) != std::string::npos);
}

TEST_CASE("score joining") {
  std::vector<ManifestEntry> m = {{"a", "a.wav", Label::kBonafide, "-"},
                                  {"b", "b.wav", Label::kSpoof, "A01"}};
  std::vector<ScoreRecord> s = {{"b", Label::kBonafide, "-", -1.0},
                                {"a", Label::kBonafide, "-", 2.0},
                                {"z", Label::kSpoof, "-", 0.0}};
  const auto j = JoinScores(m, s);
  CHECK(j.extra == 1);
  REQUIRE(j.records.size() == 2);
  CHECK(j.records[1].label == Label::kSpoof);
  CHECK(j.records[1].attack_id == "A01");
  CHECK(j.records[1].score == -1.0);
  s.erase(s.begin());
  const auto fn = [&] { JoinScores(m, s); };
  CHECK(CodeOf(fn) == ErrorCode::kMissingId);
  CHECK(Message(fn).find("b") != std::string::npos);
}

TEST_CASE("sweep emits one row per value") {
  TempDir tr, ev;
  const auto train = SmallCorpus(tr.path(), 4, 1, "tr");
  const auto eval = SmallCorpus(ev.path(), 4, 2, "ev");
  const auto rows = Sweep(FastConfig(), train, eval, SweepAxis::kSnrDb,
                          {"-5", "0", "5", "10"}, DefaultTdcf());
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.axis == "snr_db");
    CHECK(r.result.ok);
  }
  const std::string csv = SweepCsv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK_THROWS_AS(Sweep(FastConfig(), train, eval, SweepAxis::kNoiseColor,
                        {"brown"}, DefaultTdcf()),
                  Error);
}

TEST_CASE("alpha zero matches the raw baseline exactly") {
  TempDir tr, ev;
  const auto train = SmallCorpus(tr.path(), 4, 3, "tr");
  const auto eval = SmallCorpus(ev.path(), 4, 4, "ev");
  const auto rows = Sweep(FastConfig(), train, eval, SweepAxis::kAlpha, {"0"},
                          DefaultTdcf());
  const auto raw =
      EvaluateConfig(FastConfig(), train, eval, DefaultTdcf(), EvalInput::kRaw);
  REQUIRE(rows[0].result.ok);
  REQUIRE(raw.ok);
  CHECK(rows[0].result.eer == raw.eer);
  CHECK(rows[0].result.min_tdcf == raw.min_tdcf);
}

TEST_CASE("a failing cell is marked and the sweep continues") {
  TempDir tr, ev;
  auto train = SmallCorpus(tr.path(), 3, 5, "tr");
  const auto eval = SmallCorpus(ev.path(), 3, 6, "ev");
  PipelineConfig c = FastConfig();
  c.enhancer.tag = EnhancerTag::kExternal;
  c.enhancer.command = "exit 3; cp {in} {out}";
  const auto rows =
      Sweep(c, train, eval, SweepAxis::kAlpha, {"1.4", "0.6"}, DefaultTdcf());
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].result.ok);
  CHECK_FALSE(rows[1].result.ok);
  CHECK(rows[0].result.failed_utterances > 0);
  const std::string csv = SweepCsv(rows);
  CHECK(csv.find("alpha,1.4,failed,,,") != std::string::npos);
}

}  // TEST_SUITE
