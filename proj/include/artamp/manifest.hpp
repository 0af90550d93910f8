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

#ifndef ARTAMP_MANIFEST_HPP_
#define ARTAMP_MANIFEST_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artamp/metrics.hpp"

namespace artamp {

enum class ManifestFormat { kSimpleTsv, kAsvspoofProtocol };

std::optional<ManifestFormat> ParseManifestFormat(std::string_view name);

struct ManifestEntry {
  std::string utterance_id;
  std::filesystem::path path;
  Label label = Label::kBonafide;
  std::string attack_id = "-";
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::string> config_hash;  // from a "# config_hash=" line
};

/// simple_tsv: "utterance_id<TAB>path<TAB>label<TAB>attack_id", relative paths
/// resolved against the manifest's directory.
/// asvspoof_protocol: "speaker_id utterance_id - attack_id key"; audio is
/// looked up as <audio_root>/<utterance_id>.wav, then .flac. An empty
/// audio_root means the manifest's directory.
/// Errors: kFileNotFound, kParse (with line number), kDuplicateId (citing both
/// lines), kUnknownKey for a label other than bonafide/spoof.
Manifest LoadManifest(const std::filesystem::path& path, ManifestFormat format,
                      const std::filesystem::path& audio_root = {});

/// Writes simple_tsv with paths made relative to the manifest's directory
/// when they live below it.
void WriteManifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries,
                   const std::optional<std::string>& config_hash = {});

}  // namespace artamp

#endif  // ARTAMP_MANIFEST_HPP_
