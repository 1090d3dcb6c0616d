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

#include "eon/conflict.h"

#include <algorithm>
#include <string>
#include <utility>

#include "eon/error.h"

namespace eon {
namespace {

struct WeightedPath {
  double weight;
  const LinkSet* links;
};

std::vector<WeightedPath> RankedSupport(const CandidatePathTable& table,
                                        const std::vector<PairWeight>& support,
                                        int rank) {
  std::vector<WeightedPath> out;
  out.reserve(support.size());
  for (const PairWeight& pw : support) {
    out.push_back({pw.weight,
                   &table.PathAt(pw.pair.source, pw.pair.destination, rank)
                        .link_set()});
  }
  return out;
}

// Fixed iteration order (pairs in (s,d) order, outer then inner) so that the
// accumulated double is bit-stable.
double SumIntersecting(const std::vector<WeightedPath>& outer,
                       const std::vector<WeightedPath>& inner) {
  double theta = 0.0;
  for (const WeightedPath& a : outer) {
    double row = 0.0;
    for (const WeightedPath& b : inner) {
      if (a.links->Intersects(*b.links)) row += b.weight;
    }
    theta += a.weight * row;
  }
  // Weights sum to 1 only up to rounding.
  return std::min(theta, 1.0);
}

void CheckInputs(const CandidatePathTable& table,
                 const TrafficDistribution& traffic) {
  if (table.node_count() != traffic.node_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "candidate table has " + std::to_string(table.node_count()) +
                    " nodes, traffic has " +
                    std::to_string(traffic.node_count()));
  }
}

}  // namespace

ConflictMatrix::ConflictMatrix(int k, std::vector<double> values)
    : k_(k), values_(std::move(values)) {
  if (k_ < 1 || values_.size() != static_cast<std::size_t>(k_ * k_)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "conflict matrix needs k*k values");
  }
  for (int r = 0; r < k_; ++r) {
    for (int c = 0; c < k_; ++c) {
      const double v = (*this)(r, c);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::kValidation,
                    "conflict coefficient outside [0,1]");
      }
      if (v != (*this)(c, r)) {
        throw Error(ErrorCode::kValidation, "conflict matrix is not symmetric");
      }
    }
  }
}

ConflictMatrix ConflictMatrix::Identity(int k) {
  std::vector<double> values(static_cast<std::size_t>(k * k), 0.0);
  for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i * k + i)] = 1.0;
  return ConflictMatrix(k, std::move(values));
}

double ConflictCoefficient(const CandidatePathTable& table,
                           const TrafficDistribution& traffic, int i, int j) {
  CheckInputs(table, traffic);
  if (i < 1 || j < 1 || i > table.k() || j > table.k()) {
    throw Error(ErrorCode::kIndex, "path rank outside [1, " +
                                       std::to_string(table.k()) + "]");
  }
  if (i > j) std::swap(i, j);
  const std::vector<PairWeight> support = traffic.Support();
  return SumIntersecting(RankedSupport(table, support, i),
                         RankedSupport(table, support, j));
}

ConflictMatrix ComputeConflictMatrix(const CandidatePathTable& table,
                                     const TrafficDistribution& traffic) {
  CheckInputs(table, traffic);
  const int k = table.k();
  const std::vector<PairWeight> support = traffic.Support();
  std::vector<std::vector<WeightedPath>> ranked;
  for (int rank = 1; rank <= k; ++rank) {
    ranked.push_back(RankedSupport(table, support, rank));
  }
  std::vector<double> values(static_cast<std::size_t>(k * k), 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      // Upper triangle only, mirrored: exact symmetry, and the same value
      // ConflictCoefficient returns for either argument order.
      const double theta = SumIntersecting(ranked[i], ranked[j]);
      values[static_cast<std::size_t>(i * k + j)] = theta;
      values[static_cast<std::size_t>(j * k + i)] = theta;
    }
  }
  return ConflictMatrix(k, std::move(values));
}

}  // namespace eon
