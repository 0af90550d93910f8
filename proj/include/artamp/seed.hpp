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

#ifndef ARTAMP_SEED_HPP_
#define ARTAMP_SEED_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace artamp {

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(std::uint64_t v);

/// Seeds for one utterance, a pure function of (global seed, utterance id) so
/// that any subset or ordering of a corpus processes identically.
struct UtteranceSeeds {
  std::uint64_t crop;
  std::uint64_t noise;
};

UtteranceSeeds DeriveUtteranceSeeds(std::uint64_t global_seed,
                                    std::string_view utterance_id);

}  // namespace artamp

#endif  // ARTAMP_SEED_HPP_
