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

#include "artamp/config.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <map>

#include "artamp/error.hpp"
#include "artamp/seed.hpp"
#include "text_util.hpp"

namespace artamp {
namespace {

[[noreturn]] void Bad(std::string_view key, std::string_view value,
                      const char* expected) {
  throw Error(ErrorCode::kConfig, "config key '" + std::string(key) +
                                      "': bad value '" + std::string(value) +
                                      "' (expected " + expected + ")");
}

double Number(std::string_view key, std::string_view value) {
  const auto v = internal::ParseDouble(value);
  if (!v || !std::isfinite(*v)) Bad(key, value, "a finite number");
  return *v;
}

bool Flag(std::string_view key, std::string_view value) {
  if (value == "true" || value == "on" || value == "1" || value == "yes")
    return true;
  if (value == "false" || value == "off" || value == "0" || value == "no")
    return false;
  Bad(key, value, "true/false");
}

}  // namespace

void PipelineConfig::Validate() const {
  if (!std::isfinite(snr_db))
    throw Error(ErrorCode::kConfig, "snr_db must be finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw Error(ErrorCode::kConfig, "alpha must be finite and >= 0");
  if (!(crop_seconds > 0.0) || !std::isfinite(crop_seconds))
    throw Error(ErrorCode::kConfig, "crop_seconds must be > 0");
  if (parallelism < 1)
    throw Error(ErrorCode::kConfig, "parallelism must be >= 1");
  try {
    enhancer.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
}

void SetConfigValue(PipelineConfig* c, std::string_view key,
                    std::string_view value) {
  if (key == "snr_db") {
    c->snr_db = Number(key, value);
  } else if (key == "noise_color") {
    const auto v = ParseNoiseColor(value);
    if (!v) Bad(key, value, "white, pink or violet");
    c->noise_color = *v;
  } else if (key == "enhancer") {
    const auto v = ParseEnhancerTag(value);
    if (!v)
      Bad(key, value,
          "identity, oracle_clean, spectral_subtraction, wiener or external");
    c->enhancer.tag = *v;
  } else if (key == "enhancer_cmd") {
    c->enhancer.command = std::string(value);
  } else if (key == "enhancer_timeout") {
    c->enhancer.timeout_s = Number(key, value);
  } else if (key == "subtraction_factor") {
    c->enhancer.subtraction_factor = Number(key, value);
  } else if (key == "spectral_floor") {
    c->enhancer.spectral_floor = Number(key, value);
  } else if (key == "wiener_floor") {
    c->enhancer.wiener_floor = Number(key, value);
  } else if (key == "alpha") {
    c->alpha = Number(key, value);
  } else if (key == "crop_seconds") {
    c->crop_seconds = Number(key, value);
  } else if (key == "extraction_mode") {
    const auto v = ParseExtractionMode(value);
    if (!v) Bad(key, value, "projection or naive");
    c->extraction_mode = *v;
  } else if (key == "skip_noise_addition") {
    c->skip_noise_addition = Flag(key, value);
  } else if (key == "include_raw_training") {
    c->include_raw_training = Flag(key, value);
  } else if (key == "global_seed") {
    const auto v = internal::ParseUint(value);
    if (!v) Bad(key, value, "a non-negative integer");
    c->global_seed = *v;
  } else if (key == "parallelism") {
    const auto v = internal::ParseUint(value);
    if (!v || *v < 1) Bad(key, value, "a positive integer");
    c->parallelism = static_cast<std::size_t>(*v);
  } else if (key == "output_encoding") {
    if (value == "float32")
      c->output_encoding = WavEncoding::kFloat32;
    else if (value == "pcm16")
      c->output_encoding = WavEncoding::kPcm16;
    else
      Bad(key, value, "float32 or pcm16");
  } else {
    throw Error(ErrorCode::kConfig, "unknown config key '" + std::string(key) + "'");
  }
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot open config " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::size_t bad = 0;
  const auto kvs = internal::ParseKeyValues(text, &bad);
  if (bad != 0)
    throw Error(ErrorCode::kConfig, path.string() + ":" + std::to_string(bad) +
                                        ": expected key = value");
  PipelineConfig config;
  for (const auto& kv : kvs) {
    try {
      SetConfigValue(&config, kv.key, kv.value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kConfig,
                  path.string() + ":" + std::to_string(kv.line) + ": " + e.what());
    }
  }
  config.Validate();
  return config;
}

std::string CanonicalConfigText(const PipelineConfig& c) {
  using internal::FormatDouble;
  std::map<std::string, std::string> kv = {
      {"snr_db", FormatDouble(c.snr_db)},
      {"noise_color", std::string(NoiseColorName(c.noise_color))},
      {"enhancer", std::string(EnhancerTagName(c.enhancer.tag))},
      {"subtraction_factor", FormatDouble(c.enhancer.subtraction_factor)},
      {"spectral_floor", FormatDouble(c.enhancer.spectral_floor)},
      {"wiener_floor", FormatDouble(c.enhancer.wiener_floor)},
      {"alpha", FormatDouble(c.alpha)},
      {"crop_seconds", FormatDouble(c.crop_seconds)},
      {"extraction_mode", std::string(ExtractionModeName(c.extraction_mode))},
      {"skip_noise_addition", c.skip_noise_addition ? "true" : "false"},
      {"include_raw_training", c.include_raw_training ? "true" : "false"},
      {"global_seed", std::to_string(c.global_seed)},
      {"output_encoding",
       c.output_encoding == WavEncoding::kFloat32 ? "float32" : "pcm16"},
  };
  if (c.enhancer.tag == EnhancerTag::kExternal) {
    kv["enhancer_cmd"] = c.enhancer.command;
    kv["enhancer_timeout"] = FormatDouble(c.enhancer.timeout_s);
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::string ConfigHash(const PipelineConfig& config) {
  return HexDigest(Fnv1a64(CanonicalConfigText(config)));
}

}  // namespace artamp
