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

#include "artamp/manifest.hpp"

#include <fstream>
#include <map>

#include "artamp/error.hpp"
#include "text_util.hpp"

namespace artamp {

namespace fs = std::filesystem;

std::optional<ManifestFormat> ParseManifestFormat(std::string_view name) {
  if (name == "simple_tsv" || name == "tsv") return ManifestFormat::kSimpleTsv;
  if (name == "asvspoof_protocol" || name == "asvspoof")
    return ManifestFormat::kAsvspoofProtocol;
  return std::nullopt;
}

Manifest LoadManifest(const fs::path& path, ManifestFormat format,
                      const fs::path& audio_root) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path root = audio_root.empty() ? base : audio_root;

  Manifest manifest;
  std::map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = internal::Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      constexpr std::string_view kKey = "config_hash=";
      const std::string_view body = internal::Trim(trimmed.substr(1));
      if (body.substr(0, kKey.size()) == kKey)
        manifest.config_hash = std::string(body.substr(kKey.size()));
      continue;
    }
    const auto where = [&] {
      return path.string() + ":" + std::to_string(line_no) + ": ";
    };

    ManifestEntry e;
    std::string_view label_token;
    if (format == ManifestFormat::kSimpleTsv) {
      std::string_view body = line;
      if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
      const auto f = internal::Split(body, '\t');
      if (f.size() != 4 || f[0].empty() || f[1].empty())
        throw Error(ErrorCode::kParse,
                    where() + "expected utterance_id<TAB>path<TAB>label<TAB>attack_id");
      e.utterance_id = std::string(f[0]);
      const fs::path p{std::string(f[1])};
      e.path = p.is_absolute() ? p : base / p;
      label_token = f[2];
      e.attack_id = f[3].empty() ? "-" : std::string(f[3]);
    } else {
      const auto f = internal::SplitWhitespace(trimmed);
      if (f.size() != 5)
        throw Error(ErrorCode::kParse,
                    where() + "expected 'speaker_id utterance_id - attack_id key'");
      e.utterance_id = std::string(f[1]);
      e.attack_id = std::string(f[3]);
      label_token = f[4];
      const fs::path wav = root / (e.utterance_id + ".wav");
      const fs::path flac = root / (e.utterance_id + ".flac");
      std::error_code ec;
      e.path = (!fs::exists(wav, ec) && fs::exists(flac, ec)) ? flac : wav;
    }
    const auto label = ParseLabel(label_token);
    if (!label)
      throw Error(ErrorCode::kUnknownKey, where() + "unknown key '" +
                                              std::string(label_token) +
                                              "' (expected bonafide or spoof)");
    e.label = *label;

    auto [it, inserted] = first_line.emplace(e.utterance_id, line_no);
    if (!inserted)
      throw Error(ErrorCode::kDuplicateId,
                  path.string() + ": duplicate utterance_id '" + e.utterance_id +
                      "' on lines " + std::to_string(it->second) + " and " +
                      std::to_string(line_no));
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

void WriteManifest(const fs::path& path, const std::vector<ManifestEntry>& entries,
                   const std::optional<std::string>& config_hash) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "cannot write " + path.string());
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (config_hash) out << "# config_hash=" << *config_hash << "\n";
  for (const ManifestEntry& e : entries) {
    fs::path p = e.path;
    const fs::path rel = p.lexically_relative(base);
    if (!rel.empty() && *rel.begin() != "..") p = rel;
    out << e.utterance_id << '\t' << p.string() << '\t' << LabelName(e.label)
        << '\t' << e.attack_id << '\n';
  }
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "write failed: " + path.string());
}

}  // namespace artamp
