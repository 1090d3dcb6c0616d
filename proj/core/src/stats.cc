// Copyright 2026 The eon-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eon/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "eon/error.h"

namespace eon {
namespace {

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double SampleStdDev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double CiHalfWidth(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  return kNormal95 * SampleStdDev(values) /
         std::sqrt(static_cast<double>(values.size()));
}

double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "samples differ in length");
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kDegenerateInput, "correlation needs 2 points");
  }
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double mx = Mean(rx);
  const double my = Mean(ry);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "correlation of a constant input");
  }
  return sxy / std::sqrt(sxx * syy);
}

double RunsTestZ(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return 0.0;
  const std::size_t m = sorted.size();
  const double median = m % 2 == 1 ? sorted[m / 2]
                                   : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  std::vector<bool> above;
  for (double v : values) {
    if (v != median) above.push_back(v > median);
  }
  const double n1 = static_cast<double>(std::count(above.begin(), above.end(), true));
  const double n2 = static_cast<double>(above.size()) - n1;
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  double runs = 1.0;
  for (std::size_t i = 1; i < above.size(); ++i) {
    if (above[i] != above[i - 1]) runs += 1.0;
  }
  const double n = n1 + n2;
  const double expected = 2.0 * n1 * n2 / n + 1.0;
  const double variance =
      2.0 * n1 * n2 * (2.0 * n1 * n2 - n) / (n * n * (n - 1.0));
  if (variance <= 0.0) return 0.0;
  return (runs - expected) / std::sqrt(variance);
}

}  // namespace eon
