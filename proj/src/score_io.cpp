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
#include <fstream>
#include <string>

#include "artamp/error.hpp"
#include "artamp/metrics.hpp"
#include "text_util.hpp"

namespace artamp {

ScoreFile ReadScoreFile(const std::filesystem::path& path, bool flip_polarity) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  ScoreFile file;
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
        file.config_hash = std::string(body.substr(kKey.size()));
      continue;
    }
    const auto fields = internal::SplitWhitespace(trimmed);
    const auto where = [&] {
      return path.string() + ":" + std::to_string(line_no) + ": ";
    };
    if (fields.size() != 4)
      throw Error(ErrorCode::kParse,
                  where() + "expected 'utterance_id attack_id label score'");
    const auto label = ParseLabel(fields[2]);
    if (!label)
      throw Error(ErrorCode::kParse, where() + "unknown label '" +
                                         std::string(fields[2]) + "'");
    const auto score = internal::ParseDouble(fields[3]);
    if (!score || !std::isfinite(*score))
      throw Error(ErrorCode::kParse, where() + "bad score '" +
                                         std::string(fields[3]) + "'");
    file.records.push_back(ScoreRecord{std::string(fields[0]), *label,
                                       std::string(fields[1]),
                                       flip_polarity ? -*score : *score});
  }
  return file;
}

void WriteScoreFile(const std::filesystem::path& path,
                    std::span<const ScoreRecord> records,
                    const std::optional<std::string>& config_hash) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "cannot write " + path.string());
  if (config_hash) out << "# config_hash=" << *config_hash << "\n";
  for (const ScoreRecord& r : records) {
    out << r.utterance_id << ' ' << r.attack_id << ' ' << LabelName(r.label)
        << ' ' << internal::FormatDouble(r.score) << '\n';
  }
  if (!out)
    throw Error(ErrorCode::kUnwritablePath, "write failed: " + path.string());
}

}  // namespace artamp
