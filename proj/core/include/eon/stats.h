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

// Summary statistics for replicated runs.

#ifndef EON_STATS_H_
#define EON_STATS_H_

#include <span>
#include <string_view>

namespace eon {

// Two-sided 95% standard normal quantile.
inline constexpr double kNormal95 = 1.959963984540054;
inline constexpr std::string_view kCiMethod = "normal-95";

double Mean(std::span<const double> values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double SampleStdDev(std::span<const double> values);

// kNormal95 * sd / sqrt(n); 0 for fewer than 2 values.
double CiHalfWidth(std::span<const double> values);

// Pearson correlation of the average ranks. Throws kDegenerateInput for
// fewer than 2 points or a constant input, kDimensionMismatch on unequal
// lengths.
double SpearmanCorrelation(std::span<const double> x,
                           std::span<const double> y);

// Wald-Wolfowitz runs test about the median; values equal to the median are
// dropped. Returns the standardized statistic z, 0 when one side is empty.
double RunsTestZ(std::span<const double> values);

}  // namespace eon

#endif  // EON_STATS_H_
