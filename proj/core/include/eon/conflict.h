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

// Conflict coefficients and the conflict matrix.
//
// theta(i,j) is the probability that two independent requests drawn from the
// traffic distribution, routed on their own i-th and j-th shortest candidate
// paths, share a directed link:
//
//   theta(i,j) = sum_{a,b} w_a w_b [path_i(a) intersects path_j(b)]
//
// where a and b range over all ordered source-destination pairs, a == b
// included. Path ranks are 1-based.

#ifndef EON_CONFLICT_H_
#define EON_CONFLICT_H_

#include <vector>

#include "eon/topology.h"
#include "eon/traffic.h"

namespace eon {

class ConflictMatrix {
 public:
  // Row-major k*k values. Validates symmetry (exact) and range [0,1].
  ConflictMatrix(int k, std::vector<double> values);

  int k() const { return k_; }
  // 0-based storage access.
  double operator()(int row, int col) const {
    return values_[static_cast<std::size_t>(row * k_ + col)];
  }
  // theta with 1-based path ranks.
  double Theta(int i, int j) const { return (*this)(i - 1, j - 1); }
  const std::vector<double>& values() const { return values_; }

  static ConflictMatrix Identity(int k);

  friend bool operator==(const ConflictMatrix&, const ConflictMatrix&) = default;

 private:
  int k_;
  std::vector<double> values_;
};

// Throws kIndex if i or j is outside [1, table.k()], kDimensionMismatch if
// the table and the distribution disagree on node count.
double ConflictCoefficient(const CandidatePathTable& table,
                           const TrafficDistribution& traffic, int i, int j);

ConflictMatrix ComputeConflictMatrix(const CandidatePathTable& table,
                                     const TrafficDistribution& traffic);

}  // namespace eon

#endif  // EON_CONFLICT_H_
