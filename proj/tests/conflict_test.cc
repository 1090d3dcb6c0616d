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

#include <gtest/gtest.h>

#include "eon/random.h"
#include "eon/topology.h"
#include "eon/traffic.h"
#include "oracles.h"
#include "test_util.h"

namespace eon {
namespace {

using testing::CodeOf;
using testing::ThetaByEnumeration;

struct Case {
  const char* name;
  BuiltinTopology topology;
  NodeId dc_a;  // 0 for uniform
  NodeId dc_b;
};

const Case kCases[] = {
    {"R-U", BuiltinTopology::kRing12, 0, 0},
    {"NSF-U", BuiltinTopology::kNsfnet14, 0, 0},
    {"NJ-U", BuiltinTopology::kNjLata11, 0, 0},
    {"R-W", BuiltinTopology::kRing12, 1, 7},
    {"NSF-W", BuiltinTopology::kNsfnet14, 2, 14},
    {"NJ-W", BuiltinTopology::kNjLata11, 5, 8},
};

TrafficDistribution TrafficFor(const Case& c, const Topology& t) {
  return c.dc_a == 0 ? UniformDistribution(t)
                     : WeightedDistribution(t, c.dc_a, c.dc_b);
}

TEST(ConflictMatrixTest, SinglePairOnCycleIsIdentity) {
  const Topology cycle = MakeCycleTopology(8);
  const TrafficDistribution traffic(8, {{{1, 4}, 1.0}});
  const ConflictMatrix cm = ComputeConflictMatrix(AllCandidatePaths(cycle, 2), traffic);
  EXPECT_EQ(cm, ConflictMatrix::Identity(2));
  EXPECT_EQ(cm.Theta(1, 1), 1.0);
  EXPECT_EQ(cm.Theta(1, 2), 0.0);
}

TEST(ConflictMatrixTest, SinglePairDiagonalIsOne) {
  const Topology nsf = MakeBuiltinTopology(BuiltinTopology::kNsfnet14);
  const TrafficDistribution traffic(14, {{{3, 12}, 1.0}});
  const ConflictMatrix cm = ComputeConflictMatrix(AllCandidatePaths(nsf, 3), traffic);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(cm.Theta(i, i), 1.0);
}

TEST(ConflictMatrixTest, RingUniformValues) {
  const Topology ring = MakeBuiltinTopology(BuiltinTopology::kRing12);
  const ConflictMatrix cm =
      ComputeConflictMatrix(AllCandidatePaths(ring, 2), UniformDistribution(ring));
  EXPECT_NEAR(cm.Theta(1, 1), 0.2328, 0.02);
  EXPECT_NEAR(cm.Theta(1, 2), 0.4360, 0.02);
  EXPECT_NEAR(cm.Theta(2, 2), 0.5014, 0.02);
}

TEST(ConflictMatrixTest, NsfUniformAndNjWeightedValues) {
  const Topology nsf = MakeBuiltinTopology(BuiltinTopology::kNsfnet14);
  const ConflictMatrix nsf_cm =
      ComputeConflictMatrix(AllCandidatePaths(nsf, 2), UniformDistribution(nsf));
  EXPECT_NEAR(nsf_cm.Theta(1, 1), 0.0979, 0.02);
  EXPECT_NEAR(nsf_cm.Theta(1, 2), 0.1377, 0.02);
  EXPECT_NEAR(nsf_cm.Theta(2, 2), 0.2042, 0.02);
  const Topology nj = MakeBuiltinTopology(BuiltinTopology::kNjLata11);
  const ConflictMatrix nj_cm = ComputeConflictMatrix(
      AllCandidatePaths(nj, 2), WeightedDistribution(nj, 5, 8));
  EXPECT_NEAR(nj_cm.Theta(1, 1), 0.2758, 0.03);
  EXPECT_NEAR(nj_cm.Theta(1, 2), 0.0616, 0.03);
  EXPECT_NEAR(nj_cm.Theta(2, 2), 0.3306, 0.03);
}

// Double sum from the definition over exhaustively enumerated paths.
TEST(ConflictMatrixTest, MatchesEnumerationOracle) {
  for (const Case& c : kCases) {
    const Topology t = MakeBuiltinTopology(c.topology);
    const TrafficDistribution traffic = TrafficFor(c, t);
    for (int k : {2, 3}) {
      const ConflictMatrix cm = ComputeConflictMatrix(AllCandidatePaths(t, k), traffic);
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          EXPECT_NEAR(cm.Theta(i, j), ThetaByEnumeration(t, traffic, i, j), 1e-12)
              << c.name << " k=" << k << " (" << i << "," << j << ")";
        }
      }
    }
  }
}

// Two independent requests on fixed ranks, counted over many trials.
TEST(ConflictMatrixTest, MatchesMonteCarlo) {
  constexpr int kTrials = 200000;
  for (const Case& c : kCases) {
    const Topology t = MakeBuiltinTopology(c.topology);
    const TrafficDistribution traffic = TrafficFor(c, t);
    const CandidatePathTable table = AllCandidatePaths(t, 2);
    const ConflictMatrix cm = ComputeConflictMatrix(table, traffic);
    const RequestSampler sampler(traffic, 1, 1);
    Rng rng(StableHash(c.name));
    for (int i = 1; i <= 2; ++i) {
      for (int j = i; j <= 2; ++j) {
        int hits = 0;
        for (int trial = 0; trial < kTrials; ++trial) {
          const Request a = sampler(rng);
          const Request b = sampler(rng);
          hits += PathsIntersect(table.PathAt(a.source, a.destination, i),
                                 table.PathAt(b.source, b.destination, j));
        }
        EXPECT_NEAR(static_cast<double>(hits) / kTrials, cm.Theta(i, j), 0.01)
            << c.name << " (" << i << "," << j << ")";
      }
    }
  }
}

TEST(ConflictMatrixTest, SymmetricAndInRange) {
  for (const Case& c : kCases) {
    const Topology t = MakeBuiltinTopology(c.topology);
    const TrafficDistribution traffic = TrafficFor(c, t);
    const CandidatePathTable table = AllCandidatePaths(t, 4);
    const ConflictMatrix cm = ComputeConflictMatrix(table, traffic);
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const double theta = ConflictCoefficient(table, traffic, i, j);
        EXPECT_EQ(theta, ConflictCoefficient(table, traffic, j, i));
        EXPECT_EQ(theta, cm.Theta(i, j));
        EXPECT_GE(theta, 0.0);
        EXPECT_LE(theta, 1.0);
      }
    }
  }
}

TEST(ConflictMatrixTest, MissingRankUsesLastPath) {
  const Topology t = ParseTopology("nodes 2\nlink 1 2\n", "pair");
  const CandidatePathTable table = AllCandidatePaths(t, 2);
  const TrafficDistribution traffic = UniformDistribution(t);
  const ConflictMatrix cm = ComputeConflictMatrix(table, traffic);
  // (1,2) and (2,1) use opposite directions; each meets only itself.
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) EXPECT_DOUBLE_EQ(cm.Theta(i, j), 0.5);
  }
}

TEST(ConflictMatrixTest, Errors) {
  const Topology ring = MakeBuiltinTopology(BuiltinTopology::kRing12);
  const CandidatePathTable table = AllCandidatePaths(ring, 2);
  const TrafficDistribution traffic = UniformDistribution(ring);
  EXPECT_EQ(CodeOf([&] { ConflictCoefficient(table, traffic, 0, 1); }),
            ErrorCode::kIndex);
  EXPECT_EQ(CodeOf([&] { ConflictCoefficient(table, traffic, 1, 3); }),
            ErrorCode::kIndex);
  const TrafficDistribution other =
      UniformDistribution(MakeBuiltinTopology(BuiltinTopology::kNsfnet14));
  EXPECT_EQ(CodeOf([&] { ComputeConflictMatrix(table, other); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { ConflictMatrix(2, {0.1, 0.2, 0.3, 0.4}); }),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([] { ConflictMatrix(2, {0.1, 0.2, 0.2}); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { ConflictMatrix(1, {1.5}); }), ErrorCode::kValidation);
}

}  // namespace
}  // namespace eon
