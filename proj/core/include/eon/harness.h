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

// Scenario configuration, replicated Monte-Carlo runs, and result export.

#ifndef EON_HARNESS_H_
#define EON_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eon/conflict.h"
#include "eon/gof.h"
#include "eon/rsa.h"
#include "eon/topology.h"
#include "eon/traffic.h"

namespace eon {

enum class TrafficKind {
  kUniform,
  kWeighted,    // data-centre pair (node_a, node_b) holding dc_mass each
  kSinglePair,  // all traffic on (node_a, node_b)
  kFile,
};

struct TrafficSpec {
  TrafficKind kind = TrafficKind::kUniform;
  NodeId node_a = 0;
  NodeId node_b = 0;
  double dc_mass = 0.45;
  std::string file;

  friend bool operator==(const TrafficSpec&, const TrafficSpec&) = default;
};

// "uniform", "weighted:A,B[@MASS]", "pair:S,D", "file:PATH".
TrafficSpec ParseTrafficSpec(std::string_view text);
std::string FormatTrafficSpec(const TrafficSpec& spec);

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct ScenarioConfig {
  std::string name = "custom";
  // Builtin name, "cycle<n>", or file path.
  std::string topology = "ring12";
  TrafficSpec traffic;
  int k = 2;
  // Empty means everything on the first candidate path.
  std::vector<double> scheme;
  int n_requests = 1000;
  int replications = 100;
  int alpha = 1;
  int beta = 4;
  int gb = 1;
  std::uint64_t seed = kDefaultSeed;
  // Position in a sweep grid; part of the seed derivation.
  std::uint64_t grid_index = 0;
  FirstFitOrder order = FirstFitOrder::kDescendingWeight;
  // Worker threads for replications. Results do not depend on it.
  int threads = 1;

  friend bool operator==(const ScenarioConfig&,
                         const ScenarioConfig&) = default;
};

// Throws kInvalidParameter.
void ValidateConfig(const ScenarioConfig& config);

RoutingScheme SchemeOf(const ScenarioConfig& config);

// MixSeed(seed, StableHash(name), grid_index, replication).
std::uint64_t ReplicationSeed(const ScenarioConfig& config, int replication);

// Everything that does not depend on the scheme or the replication.
struct PreparedScenario {
  Topology topology;
  TrafficDistribution traffic;
  CandidatePathTable table;
  ConflictMatrix cm;
};

PreparedScenario PrepareScenario(const ScenarioConfig& config);

struct ReplicationRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int mufi = 0;
  std::optional<double> p_emp;  // null for fewer than 2 requests
  std::int64_t edges = 0;

  friend bool operator==(const ReplicationRecord&,
                         const ReplicationRecord&) = default;
};

struct ScenarioResult {
  ScenarioConfig config;
  std::vector<ReplicationRecord> replications;
  double mean_mufi = 0.0;
  double mufi_ci = 0.0;
  std::optional<double> mean_p_emp;
  std::optional<double> p_emp_ci;
  double p_theory = 0.0;
  std::string ci_method;
  std::vector<std::string> warnings;

  friend bool operator==(const ScenarioResult&, const ScenarioResult&) = default;
};

// One replication: sample, route, build the conflict graph, measure p,
// assign spectrum, validate. Throws kInvariant if the assignment is invalid.
ReplicationRecord RunReplication(const PreparedScenario& prepared,
                                 const ScenarioConfig& config,
                                 int replication);

ScenarioResult RunScenario(const PreparedScenario& prepared,
                           const ScenarioConfig& config);
ScenarioResult RunScenario(const ScenarioConfig& config);

std::vector<double> DefaultP1Grid();

// One result per grid point, grid_index = position. Needs k = 2 and a grid
// inside [0,1].
std::vector<ScenarioResult> SweepP1(const ScenarioConfig& config,
                                    std::span<const double> grid);

// R-U, NSF-U, NJ-U, R-W, NSF-W, NJ-W.
std::vector<ScenarioConfig> ScenarioPresets();
// Single pair (1,4) on an 8-node cycle: two link-disjoint candidates.
ScenarioConfig Example1Preset();
// Six presets plus "EX1". Case-insensitive. Throws kInvalidParameter.
ScenarioConfig FindPreset(std::string_view name);

struct MinimumProbabilityEntry {
  std::string scenario;
  ConflictMatrix cm;
  GofSolution solution;
};

struct MinimumProbabilityTable {
  // Preset order.
  std::vector<MinimumProbabilityEntry> entries;
  // Scenario names by increasing p_min (stable).
  std::vector<std::string> increasing_order;
};

MinimumProbabilityTable ComputeMinimumProbabilityTable();

enum class ExportFormat { kJson, kCsv };

inline constexpr std::string_view kCsvHeader =
    "scenario,p1,mean_mufi,mufi_ci,mean_p_emp,p_emp_ci,p_theory,reps,seed";

// Shortest round-trip decimal form.
std::string FormatDouble(double value);

std::string ResultsToCsv(std::span<const ScenarioResult> results);
void ExportResults(std::span<const ScenarioResult> results, ExportFormat format,
                   const std::filesystem::path& path);

}  // namespace eon

#endif  // EON_HARNESS_H_
