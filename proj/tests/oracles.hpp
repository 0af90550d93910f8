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

// Brute-force reference implementations of the detection metrics. They share
// no code with the library and favour obviousness over speed.

#ifndef ARTAMP_TESTS_ORACLES_HPP_
#define ARTAMP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace artamp::oracle {

struct Scores {
  std::vector<double> bona;
  std::vector<double> spoof;
};

// Miss: bona fide scored below t. False alarm: spoof scored at or above t.
inline std::pair<double, double> Rates(const Scores& s, double t) {
  double miss = 0, fa = 0;
  for (double b : s.bona) miss += b < t;
  for (double x : s.spoof) fa += x >= t;
  return {miss / static_cast<double>(s.bona.size()),
          fa / static_cast<double>(s.spoof.size())};
}

inline std::vector<std::pair<double, double>> AllOperatingPoints(const Scores& s) {
  std::vector<double> thresholds = s.bona;
  thresholds.insert(thresholds.end(), s.spoof.begin(), s.spoof.end());
  thresholds.push_back(-std::numeric_limits<double>::infinity());
  thresholds.push_back(std::numeric_limits<double>::infinity());
  std::vector<std::pair<double, double>> pts;
  for (double t : thresholds) pts.push_back(Rates(s, t));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// The convex hull of the operating points meets the diagonal p_miss = p_fa
// in a segment; its lowest point lies on a chord between two points on
// opposite sides of the diagonal (or on a point lying on it). Take the
// minimum over every such chord.
inline double Eer(const Scores& s) {
  const auto pts = AllOperatingPoints(s);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [ma, fa_a] : pts) {
    const double da = fa_a - ma;
    if (da < 0) continue;
    for (const auto& [mb, fa_b] : pts) {
      const double db = fa_b - mb;
      if (db > 0) continue;
      double v;
      if (da == 0) {
        v = ma;
      } else if (db == 0) {
        v = mb;
      } else {
        const double t = da / (da - db);
        v = ma + t * (mb - ma);
      }
      best = std::min(best, v);
    }
  }
  return best;
}

inline double MinNormalizedTdcf(const Scores& s, double c0, double c1,
                                double c2) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [pm, pf] : AllOperatingPoints(s))
    best = std::min(best, c0 + c1 * pm + c2 * pf);
  return best / (c0 + std::min(c1, c2));
}

}  // namespace artamp::oracle

#endif  // ARTAMP_TESTS_ORACLES_HPP_
