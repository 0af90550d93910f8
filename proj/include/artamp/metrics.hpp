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

#ifndef ARTAMP_METRICS_HPP_
#define ARTAMP_METRICS_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace artamp {

enum class Label { kBonafide, kSpoof };

std::string_view LabelName(Label label);
std::optional<Label> ParseLabel(std::string_view name);

/// One countermeasure decision score; higher means more bona fide.
struct ScoreRecord {
  std::string utterance_id;
  Label label = Label::kBonafide;
  std::string attack_id = "-";
  double score = 0.0;
};

/// Error rates at threshold tau: a bona fide trial is missed when its score is
/// below tau, a spoof is falsely accepted when its score is at least tau.
struct DetPoint {
  double threshold;
  double p_miss;
  double p_fa;
};

/// One point per distinct score plus a final point at +inf, in increasing
/// threshold order. Throws kSingleClass unless both labels are present.
std::vector<DetPoint> DetCurve(std::span<const ScoreRecord> records);

DetPoint OperatingPoint(std::span<const ScoreRecord> records, double threshold);

/// Equal error rate in [0, 1]: where the lower convex hull of the DET
/// operating points meets p_miss == p_fa, interpolating linearly between
/// adjacent hull points.
double Eer(std::span<const ScoreRecord> records);

/// Priors, costs and the operating point of the downstream ASV system. No
/// defaults are compiled in; the shipped values live in
/// config/tdcf_default.conf.
struct TdcfParams {
  double p_target = 0.0;
  double p_nontarget = 0.0;
  double p_spoof = 0.0;
  double c_miss = 0.0;
  double c_fa = 0.0;
  double c_fa_spoof = 0.0;
  double asv_pmiss = 0.0;
  double asv_pfa = 0.0;
  double asv_pmiss_spoof = 0.0;

  /// Priors must sum to 1 within 1e-9, costs be non-negative and rates lie in
  /// [0, 1]. Throws kInvalidArgument otherwise.
  void Validate() const;
};

/// Constrained tandem cost C0 + C1 * p_miss_cm + C2 * p_fa_cm.
struct TdcfCoefficients {
  double c0;
  double c1;
  double c2;
};

TdcfCoefficients ComputeTdcfCoefficients(const TdcfParams& params);

/// Minimum over thresholds of the tandem cost divided by the cost of the
/// better default decision, C0 + min(C1, C2). Throws kCoefficientDegeneracy
/// when C1 <= 0 or C2 <= 0.
double MinTdcf(std::span<const ScoreRecord> records, const TdcfParams& params);
double MinTdcf(std::span<const ScoreRecord> records,
               const TdcfCoefficients& coefficients);

/// Flat "key = value" file with the TdcfParams field names.
TdcfParams LoadTdcfParams(const std::filesystem::path& path);

struct ReportRow {
  std::string scope;  // "pooled" or an attack id
  std::string metric;
  double value;
};

struct Report {
  std::vector<ReportRow> rows;

  std::string Text() const;
  /// "scope,metric,value" header followed by one line per row.
  std::string Csv() const;
};

/// Pooled EER (percent) and min t-DCF; with `group_by_attack`, also the EER of
/// each attack's spoofs against all bona fide trials.
Report MakeReport(std::span<const ScoreRecord> records, const TdcfParams& params,
                  bool group_by_attack);

/// A CM score file: "utterance_id attack_id label score" per line. Lines
/// starting with '#' are comments; "# config_hash=<hex>" is recorded.
struct ScoreFile {
  std::vector<ScoreRecord> records;
  std::optional<std::string> config_hash;
};

/// Throws kParse with the line number for malformed lines. `flip_polarity`
/// negates every score.
ScoreFile ReadScoreFile(const std::filesystem::path& path,
                        bool flip_polarity = false);
void WriteScoreFile(const std::filesystem::path& path,
                    std::span<const ScoreRecord> records,
                    const std::optional<std::string>& config_hash);

}  // namespace artamp

#endif  // ARTAMP_METRICS_HPP_
