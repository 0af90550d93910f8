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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "artamp/error.hpp"
#include "artamp/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace artamp;
using artamp::testing::TempDir;

namespace {

std::vector<ScoreRecord> Records(const std::vector<double>& bona,
                                 const std::vector<double>& spoof,
                                 const std::string& attack = "A01") {
  std::vector<ScoreRecord> r;
  int i = 0;
  for (double s : bona)
    r.push_back({"b" + std::to_string(i++), Label::kBonafide, "-", s});
  for (double s : spoof)
    r.push_back({"s" + std::to_string(i++), Label::kSpoof, attack, s});
  return r;
}

oracle::Scores Split(const std::vector<ScoreRecord>& r) {
  oracle::Scores s;
  for (const auto& x : r)
    (x.label == Label::kBonafide ? s.bona : s.spoof).push_back(x.score);
  return s;
}

TdcfParams UnitParams() {
  // C0 = 0 and C1 = C2 = 0.5.
  TdcfParams p;
  p.p_target = 0.5;
  p.p_nontarget = 0.0;
  p.p_spoof = 0.5;
  p.c_miss = 1.0;
  p.c_fa = 1.0;
  p.c_fa_spoof = 1.0;
  return p;
}

TdcfParams DefaultParams() {
  return LoadTdcfParams(ARTAMP_DEFAULT_TDCF);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("det curve of separated scores reaches the origin") {
  const auto curve = DetCurve(Records({0.9, 0.8}, {0.1, 0.2}));
  bool origin = false;
  for (const auto& p : curve) origin |= p.p_miss == 0.0 && p.p_fa == 0.0;
  CHECK(origin);
}

TEST_CASE("det curve of tied scores has only the endpoints") {
  const auto curve = DetCurve(Records({0.5, 0.5}, {0.5, 0.5, 0.5}));
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].p_miss == 0.0);
  CHECK(curve[0].p_fa == 1.0);
  CHECK(curve[1].p_miss == 1.0);
  CHECK(curve[1].p_fa == 0.0);
}

TEST_CASE("operating point of the four-record example") {
  const auto p = OperatingPoint(Records({0.8, 0.4}, {0.6, 0.2}), 0.5);
  CHECK(p.p_miss == 0.5);
  CHECK(p.p_fa == 0.5);
}

TEST_CASE("det curve is monotone") {
  std::mt19937_64 rng(2);
  const auto r = Records(artamp::testing::RandomVector(rng, 50),
                         artamp::testing::RandomVector(rng, 70));
  const auto curve = DetCurve(r);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].p_miss >= curve[i - 1].p_miss);
    CHECK(curve[i].p_fa <= curve[i - 1].p_fa);
  }
}

TEST_CASE("eer examples") {
  CHECK(Eer(Records({0.9, 0.8}, {0.1, 0.2})) == 0.0);
  CHECK(Eer(Records({0.8, 0.4}, {0.6, 0.2})) == 0.25);
  // Reversed scores: the convex hull falls back to chance.
  CHECK(Eer(Records({0.1, 0.2}, {0.9, 0.8})) == 0.5);
}

TEST_CASE("single-class and non-finite scores are rejected") {
  CHECK_THROWS_AS(Eer(Records({0.1, 0.2}, {})), Error);
  CHECK_THROWS_AS(Eer(Records({}, {0.1})), Error);
  CHECK_THROWS_AS(Eer(Records({NAN}, {0.1})), Error);
}

TEST_CASE("eer matches the brute-force oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> n(1, 200);
  std::uniform_int_distribution<int> levels(2, 30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> bona, spoof;
    const bool ties = trial % 2 == 0;
    std::uniform_int_distribution<int> level(0, levels(rng));
    std::normal_distribution<double> g(0.0, 1.0);
    const int nb = n(rng), ns = n(rng);
    for (int i = 0; i < nb; ++i) bona.push_back(ties ? level(rng) + 1.0 : g(rng) + 1.0);
    for (int i = 0; i < ns; ++i) spoof.push_back(ties ? level(rng) : g(rng));
    const auto r = Records(bona, spoof);
    CHECK(std::abs(Eer(r) - oracle::Eer(Split(r))) <= 1e-12);
  }
}

TEST_CASE("eer of identically distributed labels is near one half") {
  std::mt19937_64 rng(12);
  const auto r = Records(artamp::testing::RandomVector(rng, 5000),
                         artamp::testing::RandomVector(rng, 5000));
  CHECK(std::abs(Eer(r) - 0.5) <= 3.0 * std::sqrt(0.25 / 5000.0));
}

TEST_CASE("t-dcf coefficients") {
  const auto k = ComputeTdcfCoefficients(UnitParams());
  CHECK(k.c0 == 0.0);
  CHECK(k.c1 == 0.5);
  CHECK(k.c2 == 0.5);
}

TEST_CASE("t-dcf hand examples") {
  CHECK(MinTdcf(Records({0.9, 0.8}, {0.1, 0.2}), UnitParams()) == 0.0);
  CHECK(MinTdcf(Records({0.8, 0.4}, {0.6, 0.2}), UnitParams()) == 0.5);
}

TEST_CASE("t-dcf is bounded by one") {
  std::mt19937_64 rng(6);
  const auto r = Records(artamp::testing::RandomVector(rng, 80),
                         artamp::testing::RandomVector(rng, 90));
  const double v = MinTdcf(r, DefaultParams());
  CHECK(v >= 0.0);
  CHECK(v <= 1.0 + 1e-12);
}

TEST_CASE("degenerate coefficients are rejected") {
  const auto r = Records({0.9}, {0.1});
  TdcfParams p = UnitParams();
  p.p_target = 0.0;
  p.p_spoof = 1.0;
  CHECK_THROWS_AS(MinTdcf(r, p), Error);
  CHECK_THROWS_AS(MinTdcf(r, TdcfCoefficients{0.0, 0.5, 0.0}), Error);
  p = UnitParams();
  p.p_spoof = 0.6;
  CHECK_THROWS_AS(MinTdcf(r, p), Error);
}

TEST_CASE("min t-dcf matches the brute-force oracle") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> n(1, 150);
  const auto k = ComputeTdcfCoefficients(DefaultParams());
  for (int trial = 0; trial < 60; ++trial) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> bona, spoof;
    const int nb = n(rng), ns = n(rng);
    for (int i = 0; i < nb; ++i) bona.push_back(std::round(4 * g(rng) + 3) / 4);
    for (int i = 0; i < ns; ++i) spoof.push_back(std::round(4 * g(rng)) / 4);
    const auto r = Records(bona, spoof);
    CHECK(std::abs(MinTdcf(r, k) -
                   oracle::MinNormalizedTdcf(Split(r), k.c0, k.c1, k.c2)) <=
          1e-12);
  }
}

TEST_CASE("t-dcf parameter files") {
  TempDir dir;
  const auto p = DefaultParams();
  CHECK(p.p_target + p.p_nontarget + p.p_spoof == doctest::Approx(1.0));
  artamp::testing::WriteFile(dir / "bad.conf", "p_target = 1\nbogus = 2\n");
  CHECK_THROWS_AS(LoadTdcfParams(dir / "bad.conf"), Error);
  artamp::testing::WriteFile(dir / "partial.conf", "p_target = 1\n");
  CHECK_THROWS_AS(LoadTdcfParams(dir / "partial.conf"), Error);
  CHECK_THROWS_AS(LoadTdcfParams(dir / "none.conf"), Error);
}

TEST_CASE("report: single attack matches pooled") {
  const auto r = Records({0.8, 0.4, 0.7}, {0.6, 0.2, 0.1});
  const auto rep = MakeReport(r, DefaultParams(), true);
  double pooled = -1, attack = -2;
  for (const auto& row : rep.rows) {
    if (row.metric != "eer_percent") continue;
    (row.scope == "pooled" ? pooled : attack) = row.value;
  }
  CHECK(pooled == attack);
}

TEST_CASE("report: a separated attack has zero eer") {
  auto r = Records({0.9, 0.8, 0.7, 0.6}, {0.1, 0.2}, "A01");
  const auto overlap = Records({}, {0.85, 0.65}, "A02");
  r.insert(r.end(), overlap.begin(), overlap.end());
  const auto rep = MakeReport(r, DefaultParams(), true);
  double pooled = -1, a1 = -1, a2 = -1;
  for (const auto& row : rep.rows) {
    if (row.metric != "eer_percent") continue;
    if (row.scope == "pooled") pooled = row.value;
    if (row.scope == "A01") a1 = row.value;
    if (row.scope == "A02") a2 = row.value;
  }
  CHECK(a1 == 0.0);
  CHECK(pooled > 0.0);
  CHECK(a2 > 0.0);
  oracle::Scores s{{0.9, 0.8, 0.7, 0.6}, {0.1, 0.2, 0.85, 0.65}};
  CHECK(pooled == doctest::Approx(100.0 * oracle::Eer(s)));
}

TEST_CASE("report: without grouping only pooled rows appear") {
  const auto rep =
      MakeReport(Records({0.8, 0.4}, {0.6, 0.2}), DefaultParams(), false);
  for (const auto& row : rep.rows) CHECK(row.scope == "pooled");
  CHECK(rep.Csv().rfind("scope,metric,value\n", 0) == 0);
}

TEST_CASE("score files round trip with their hash") {
  TempDir dir;
  const auto r = Records({0.25, -1.5}, {3.0});
  WriteScoreFile(dir / "s.txt", r, std::string("0123456789abcdef"));
  const auto f = ReadScoreFile(dir / "s.txt");
  REQUIRE(f.config_hash.has_value());
  CHECK(*f.config_hash == "0123456789abcdef");
  REQUIRE(f.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(f.records[i].utterance_id == r[i].utterance_id);
    CHECK(f.records[i].label == r[i].label);
    CHECK(f.records[i].attack_id == r[i].attack_id);
    CHECK(f.records[i].score == r[i].score);
  }
  const auto flipped = ReadScoreFile(dir / "s.txt", true);
  CHECK(flipped.records[0].score == -0.25);
}

TEST_CASE("malformed score lines report their line number") {
  TempDir dir;
  artamp::testing::WriteFile(dir / "s.txt",
                             "# comment\nu1 - bonafide 0.5\nu2 - spoof abc\n");
  try {
    ReadScoreFile(dir / "s.txt");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
}

}  // TEST_SUITE
