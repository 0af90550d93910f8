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

#include "artamp/error.hpp"
#include "artamp/mixing.hpp"
#include "artamp/noise.hpp"
#include "artamp/synth.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace artamp;

TEST_SUITE("mixing") {

TEST_CASE("0 dB with equal energies adds noise unscaled") {
  const Waveform y = AddNoiseAtSnr(Waveform({1, 1, 1, 1}, 4),
                                   Waveform({1, -1, 1, -1}, 4), {0.0});
  CHECK(y == Waveform({2, 0, 2, 0}, 4));
}

TEST_CASE("10 dB scales noise by sqrt(1/10)") {
  const Waveform y = AddNoiseAtSnr(Waveform({1, 1, 1, 1}, 4),
                                   Waveform({1, -1, 1, -1}, 4), {10.0});
  const double g = std::sqrt(0.1);
  CHECK(y[0] == doctest::Approx(1 + g).epsilon(1e-15));
  CHECK(y[1] == doctest::Approx(1 - g).epsilon(1e-15));
  CHECK(y[0] == doctest::Approx(1.3162).epsilon(1e-4));
  CHECK(y[1] == doctest::Approx(0.6838).epsilon(1e-4));
}

TEST_CASE("silent noise and signals are rejected") {
  const Waveform x({1, 1}, 2);
  const Waveform z({0, 0}, 2);
  CHECK_THROWS_AS(AddNoiseAtSnr(x, z, {0.0}), Error);
  CHECK_THROWS_AS(AddNoiseAtSnr(z, x, {0.0}), Error);
  CHECK_THROWS_AS(AddNoiseAtSnr(x, Waveform({1, 1, 1}, 2), {0.0}), Error);
  CHECK_THROWS_AS(AddNoiseAtSnr(x, x, {NAN}), Error);
}

TEST_CASE("measured snr equals the target") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> snr(-20.0, 40.0);
  std::uniform_int_distribution<std::size_t> len(1, 4000);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = len(rng);
    const Waveform x = artamp::testing::RandomWaveform(rng, n, 16000, 0.3);
    const Waveform noise = artamp::testing::RandomWaveform(rng, n, 16000, 2.0);
    const double s = snr(rng);
    CHECK(std::abs(MeasureSnr(x, AddNoiseAtSnr(x, noise, {s})) - s) <= 1e-6);
  }
}

TEST_CASE("wada: clean pseudo-speech scores above its noisy version") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Waveform clean = PseudoSpeech(seed, 3.0, 16000);
    const Waveform noise =
        GenerateNoise({NoiseColor::kWhite, clean.size(), 16000, seed + 100});
    const Waveform noisy = AddNoiseAtSnr(clean, noise, {0.0});
    CHECK(WadaSnrEstimate(clean) > WadaSnrEstimate(noisy));
  }
}

TEST_CASE("wada: gaussian noise sits near the table floor") {
  const Waveform n = GenerateNoise({NoiseColor::kWhite, 48000, 16000, 5});
  CHECK(WadaSnrEstimate(n) <= 0.0);
}

TEST_CASE("wada: estimates lie in the table range and track snr") {
  const Waveform clean = PseudoSpeech(9, 3.0, 16000);
  const Waveform noise =
      GenerateNoise({NoiseColor::kWhite, clean.size(), 16000, 10});
  double prev = -1e9;
  for (double s : {-5.0, 5.0, 15.0, 25.0}) {
    const double est = WadaSnrEstimate(AddNoiseAtSnr(clean, noise, {s}));
    CHECK(est >= -20.0);
    CHECK(est <= 100.0);
    CHECK(est > prev);
    prev = est;
  }
}

TEST_CASE("wada: silence and very short input are degenerate") {
  CHECK_THROWS_AS(WadaSnrEstimate(Waveform(std::vector<double>(16000, 0.0), 16000)),
                  Error);
  CHECK_THROWS_AS(WadaSnrEstimate(Waveform(std::vector<double>(100, 0.1), 16000)),
                  Error);
}

}  // TEST_SUITE
