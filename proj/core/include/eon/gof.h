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

// The intersecting probability of a routing scheme,
//
//   p(x) = sum_{i,j} theta(i,j) x_i x_j,   x on the probability simplex,
//
// and its global minimum. The conflict matrix is not assumed positive
// semidefinite, so the exact solver enumerates active sets.

#ifndef EON_GOF_H_
#define EON_GOF_H_

#include <span>
#include <string_view>
#include <vector>

#include "eon/conflict.h"

namespace eon {

class RoutingScheme {
 public:
  // Validates non-negativity and sum within kSimplexTolerance of 1.
  explicit RoutingScheme(std::vector<double> probabilities);

  static RoutingScheme Vertex(int k, int rank);  // rank is 1-based
  static RoutingScheme Uniform(int k);
  // (p1, 1 - p1).
  static RoutingScheme TwoPath(double p1);

  int k() const { return static_cast<int>(probabilities_.size()); }
  double operator[](int index) const {
    return probabilities_[static_cast<std::size_t>(index)];
  }
  std::span<const double> probabilities() const { return probabilities_; }

  friend bool operator==(const RoutingScheme&, const RoutingScheme&) = default;

 private:
  std::vector<double> probabilities_;
};

double EvaluateGof(const ConflictMatrix& cm, const RoutingScheme& scheme);

enum class Certificate {
  kInteriorStationary,  // KKT point with full support
  kBoundary,            // KKT point on a proper face
  kVertex,              // a single candidate path
  kBestFound,           // heuristic result, not certified
};

std::string_view CertificateName(Certificate certificate);

struct GofSolution {
  RoutingScheme scheme;
  double p_min = 0.0;
  Certificate certificate = Certificate::kVertex;
  // Supports whose KKT system was singular and therefore skipped.
  int singular_supports = 0;
};

// Closed form for k = 2 (substitute x2 = 1 - x1). Ties go to the smaller x1.
GofSolution MinimizeGofK2(const ConflictMatrix& cm);

// Exact active-set enumeration up to this k; multi-start projected gradient
// beyond it.
inline constexpr int kMaxExactGofK = 12;

// Global minimum over the simplex. Ties go to the lexicographically smallest
// scheme.
GofSolution MinimizeGof(const ConflictMatrix& cm);

}  // namespace eon

#endif  // EON_GOF_H_
