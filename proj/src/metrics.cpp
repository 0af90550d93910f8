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

#include "artamp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>

#include "artamp/error.hpp"
#include "text_util.hpp"

namespace artamp {
namespace {

struct SplitScores {
  std::vector<double> bonafide;
  std::vector<double> spoof;
};

SplitScores SortedByLabel(std::span<const ScoreRecord> records) {
  SplitScores s;
  for (const ScoreRecord& r : records) {
    if (!std::isfinite(r.score))
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite score for " + r.utterance_id);
    (r.label == Label::kBonafide ? s.bonafide : s.spoof).push_back(r.score);
  }
  if (s.bonafide.empty() || s.spoof.empty())
    throw Error(ErrorCode::kSingleClass,
                "scores must contain both bona fide and spoof trials");
  std::sort(s.bonafide.begin(), s.bonafide.end());
  std::sort(s.spoof.begin(), s.spoof.end());
  return s;
}

DetPoint PointAt(const SplitScores& s, double threshold) {
  const auto miss = std::lower_bound(s.bonafide.begin(), s.bonafide.end(),
                                     threshold) - s.bonafide.begin();
  const auto below = std::lower_bound(s.spoof.begin(), s.spoof.end(),
                                      threshold) - s.spoof.begin();
  const auto n_spoof = static_cast<std::ptrdiff_t>(s.spoof.size());
  return DetPoint{threshold,
                  static_cast<double>(miss) / static_cast<double>(s.bonafide.size()),
                  static_cast<double>(n_spoof - below) /
                      static_cast<double>(n_spoof)};
}

std::vector<DetPoint> Curve(const SplitScores& s) {
  std::vector<double> thresholds;
  thresholds.reserve(s.bonafide.size() + s.spoof.size() + 1);
  std::merge(s.bonafide.begin(), s.bonafide.end(), s.spoof.begin(),
             s.spoof.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  thresholds.push_back(std::numeric_limits<double>::infinity());
  std::vector<DetPoint> curve;
  curve.reserve(thresholds.size());
  for (double t : thresholds) curve.push_back(PointAt(s, t));
  return curve;
}

// z-component of (b - a) x (c - a) in the (p_miss, p_fa) plane.
double Cross(const DetPoint& a, const DetPoint& b, const DetPoint& c) {
  return (b.p_miss - a.p_miss) * (c.p_fa - a.p_fa) -
         (b.p_fa - a.p_fa) * (c.p_miss - a.p_miss);
}

}  // namespace

std::string_view LabelName(Label label) {
  return label == Label::kBonafide ? "bonafide" : "spoof";
}

std::optional<Label> ParseLabel(std::string_view name) {
  if (name == "bonafide") return Label::kBonafide;
  if (name == "spoof") return Label::kSpoof;
  return std::nullopt;
}

std::vector<DetPoint> DetCurve(std::span<const ScoreRecord> records) {
  return Curve(SortedByLabel(records));
}

DetPoint OperatingPoint(std::span<const ScoreRecord> records, double threshold) {
  return PointAt(SortedByLabel(records), threshold);
}

double Eer(std::span<const ScoreRecord> records) {
  const std::vector<DetPoint> curve = DetCurve(records);
  // Lower convex hull; points arrive with p_miss non-decreasing and p_fa
  // non-increasing.
  std::vector<DetPoint> hull;
  for (const DetPoint& p : curve) {
    if (!hull.empty() && hull.back().p_miss == p.p_miss) {
      if (p.p_fa < hull.back().p_fa) hull.pop_back();
      else continue;
    }
    while (hull.size() >= 2 &&
           Cross(hull[hull.size() - 2], hull.back(), p) <= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const DetPoint& a = hull[i];
    const DetPoint& b = hull[i + 1];
    const double da = a.p_fa - a.p_miss;
    const double db = b.p_fa - b.p_miss;
    if (da == 0.0) return a.p_miss;
    if (da > 0.0 && db <= 0.0) {
      const double t = da / (da - db);
      return a.p_miss + t * (b.p_miss - a.p_miss);
    }
  }
  return hull.back().p_miss;
}

void TdcfParams::Validate() const {
  const double priors = p_target + p_nontarget + p_spoof;
  if (std::abs(priors - 1.0) > 1e-9)
    throw Error(ErrorCode::kInvalidArgument, "t-DCF priors must sum to 1");
  for (double p : {p_target, p_nontarget, p_spoof})
    if (p < 0.0)
      throw Error(ErrorCode::kInvalidArgument, "t-DCF priors must be >= 0");
  for (double c : {c_miss, c_fa, c_fa_spoof})
    if (!(c >= 0.0) || !std::isfinite(c))
      throw Error(ErrorCode::kInvalidArgument, "t-DCF costs must be >= 0");
  for (double r : {asv_pmiss, asv_pfa, asv_pmiss_spoof})
    if (!(r >= 0.0 && r <= 1.0))
      throw Error(ErrorCode::kInvalidArgument,
                  "ASV error rates must lie in [0, 1]");
}

TdcfCoefficients ComputeTdcfCoefficients(const TdcfParams& p) {
  p.Validate();
  const double c0 = p.p_target * p.c_miss * p.asv_pmiss +
                    p.p_nontarget * p.c_fa * p.asv_pfa;
  const double c1 = p.p_target * p.c_miss - c0;
  const double c2 = p.p_spoof * p.c_fa_spoof * (1.0 - p.asv_pmiss_spoof);
  return TdcfCoefficients{c0, c1, c2};
}

double MinTdcf(std::span<const ScoreRecord> records, const TdcfParams& params) {
  return MinTdcf(records, ComputeTdcfCoefficients(params));
}

double MinTdcf(std::span<const ScoreRecord> records,
               const TdcfCoefficients& k) {
  if (!(k.c1 > 0.0) || !(k.c2 > 0.0))
    throw Error(ErrorCode::kCoefficientDegeneracy,
                "t-DCF coefficients C1 and C2 must be positive (C1=" +
                    internal::FormatDouble(k.c1) +
                    ", C2=" + internal::FormatDouble(k.c2) + ")");
  const std::vector<DetPoint> curve = DetCurve(records);
  double best = std::numeric_limits<double>::infinity();
  for (const DetPoint& p : curve)
    best = std::min(best, k.c0 + k.c1 * p.p_miss + k.c2 * p.p_fa);
  return best / (k.c0 + std::min(k.c1, k.c2));
}

TdcfParams LoadTdcfParams(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::size_t bad = 0;
  const auto kvs = internal::ParseKeyValues(text, &bad);
  if (bad != 0)
    throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(bad) +
                                       ": expected key = value");
  TdcfParams p;
  const std::map<std::string, double*> fields = {
      {"p_target", &p.p_target},     {"p_nontarget", &p.p_nontarget},
      {"p_spoof", &p.p_spoof},       {"c_miss", &p.c_miss},
      {"c_fa", &p.c_fa},             {"c_fa_spoof", &p.c_fa_spoof},
      {"asv_pmiss", &p.asv_pmiss},   {"asv_pfa", &p.asv_pfa},
      {"asv_pmiss_spoof", &p.asv_pmiss_spoof}};
  std::map<std::string, bool> seen;
  for (const auto& kv : kvs) {
    auto it = fields.find(kv.key);
    if (it == fields.end())
      throw Error(ErrorCode::kUnknownKey, path.string() + ":" +
                                              std::to_string(kv.line) +
                                              ": unknown key '" + kv.key + "'");
    const auto v = internal::ParseDouble(kv.value);
    if (!v)
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(kv.line) +
                                         ": not a number: " + kv.value);
    *it->second = *v;
    seen[kv.key] = true;
  }
  for (const auto& [name, ptr] : fields)
    if (!seen.count(name))
      throw Error(ErrorCode::kParse,
                  path.string() + ": missing t-DCF parameter '" + name + "'");
  p.Validate();
  return p;
}

std::string Report::Text() const {
  std::ostringstream out;
  for (const ReportRow& r : rows) {
    out << r.scope << "  " << r.metric << " = " << internal::FormatDouble(r.value)
        << "\n";
  }
  return out.str();
}

std::string Report::Csv() const {
  std::string out = "scope,metric,value\n";
  for (const ReportRow& r : rows)
    out += r.scope + "," + r.metric + "," + internal::FormatDouble(r.value) + "\n";
  return out;
}

Report MakeReport(std::span<const ScoreRecord> records, const TdcfParams& params,
                  bool group_by_attack) {
  Report report;
  std::size_t n_bona = 0, n_spoof = 0;
  for (const ScoreRecord& r : records)
    (r.label == Label::kBonafide ? n_bona : n_spoof)++;
  report.rows.push_back({"pooled", "n_bonafide", static_cast<double>(n_bona)});
  report.rows.push_back({"pooled", "n_spoof", static_cast<double>(n_spoof)});
  report.rows.push_back({"pooled", "eer_percent", 100.0 * Eer(records)});
  report.rows.push_back({"pooled", "min_tdcf", MinTdcf(records, params)});
  if (!group_by_attack) return report;

  std::map<std::string, std::vector<ScoreRecord>> by_attack;
  std::vector<ScoreRecord> bonafide;
  for (const ScoreRecord& r : records) {
    if (r.label == Label::kBonafide)
      bonafide.push_back(r);
    else
      by_attack[r.attack_id].push_back(r);
  }
  for (auto& [attack, spoofs] : by_attack) {
    std::vector<ScoreRecord> pool = bonafide;
    pool.insert(pool.end(), spoofs.begin(), spoofs.end());
    report.rows.push_back({attack, "eer_percent", 100.0 * Eer(pool)});
  }
  return report;
}

}  // namespace artamp
