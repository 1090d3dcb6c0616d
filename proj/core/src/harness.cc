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

#include "eon/harness.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include "eon/error.h"
#include "eon/json_io.h"
#include "eon/random.h"
#include "eon/stats.h"

namespace eon {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

[[noreturn]] void BadSpec(std::string_view text) {
  throw Error(ErrorCode::kInvalidParameter,
              "bad traffic spec '" + std::string(text) +
                  "' (expected uniform, weighted:A,B[@MASS], pair:S,D or "
                  "file:PATH)");
}

template <typename T>
T ParseNumber(std::string_view token, std::string_view whole) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) BadSpec(whole);
  return value;
}

std::pair<NodeId, NodeId> ParseNodePair(std::string_view body,
                                        std::string_view whole) {
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) BadSpec(whole);
  return {ParseNumber<int>(body.substr(0, comma), whole),
          ParseNumber<int>(body.substr(comma + 1), whole)};
}

TrafficDistribution MakeTraffic(const TrafficSpec& spec,
                                const Topology& topology) {
  switch (spec.kind) {
    case TrafficKind::kUniform:
      return UniformDistribution(topology);
    case TrafficKind::kWeighted:
      return WeightedDistribution(topology, spec.node_a, spec.node_b,
                                  spec.dc_mass);
    case TrafficKind::kSinglePair:
      return TrafficDistribution(topology.node_count(),
                                 {{{spec.node_a, spec.node_b}, 1.0}});
    case TrafficKind::kFile:
      return LoadTrafficFile(spec.file, topology.node_count());
  }
  throw Error(ErrorCode::kInvalidParameter, "unknown traffic kind");
}

ScenarioConfig Preset(std::string name, std::string topology,
                      TrafficSpec traffic) {
  ScenarioConfig config;
  config.name = std::move(name);
  config.topology = std::move(topology);
  config.traffic = traffic;
  return config;
}

TrafficSpec Weighted(NodeId a, NodeId b) {
  return TrafficSpec{TrafficKind::kWeighted, a, b, 0.45, {}};
}

void Aggregate(ScenarioResult& result) {
  std::vector<double> mufi;
  std::vector<double> p;
  for (const ReplicationRecord& r : result.replications) {
    mufi.push_back(r.mufi);
    if (r.p_emp) p.push_back(*r.p_emp);
  }
  result.mean_mufi = Mean(mufi);
  result.mufi_ci = CiHalfWidth(mufi);
  if (!p.empty()) {
    result.mean_p_emp = Mean(p);
    result.p_emp_ci = CiHalfWidth(p);
  }
  result.ci_method = std::string(kCiMethod);
}

}  // namespace

TrafficSpec ParseTrafficSpec(std::string_view text) {
  const std::string lower = Lower(text);
  TrafficSpec spec;
  if (lower == "uniform") return spec;
  if (lower.rfind("weighted:", 0) == 0) {
    spec.kind = TrafficKind::kWeighted;
    std::string_view body = std::string_view(lower).substr(9);
    const auto at = body.find('@');
    if (at != std::string_view::npos) {
      spec.dc_mass = ParseNumber<double>(body.substr(at + 1), text);
      body = body.substr(0, at);
    }
    std::tie(spec.node_a, spec.node_b) = ParseNodePair(body, text);
    return spec;
  }
  if (lower.rfind("pair:", 0) == 0) {
    spec.kind = TrafficKind::kSinglePair;
    std::tie(spec.node_a, spec.node_b) =
        ParseNodePair(std::string_view(lower).substr(5), text);
    return spec;
  }
  if (lower.rfind("file:", 0) == 0 && text.size() > 5) {
    spec.kind = TrafficKind::kFile;
    spec.file = std::string(text.substr(5));
    return spec;
  }
  BadSpec(text);
}

std::string FormatTrafficSpec(const TrafficSpec& spec) {
  switch (spec.kind) {
    case TrafficKind::kUniform:
      return "uniform";
    case TrafficKind::kWeighted:
      return "weighted:" + std::to_string(spec.node_a) + "," +
             std::to_string(spec.node_b) + "@" + FormatDouble(spec.dc_mass);
    case TrafficKind::kSinglePair:
      return "pair:" + std::to_string(spec.node_a) + "," +
             std::to_string(spec.node_b);
    case TrafficKind::kFile:
      return "file:" + spec.file;
  }
  return "";
}

void ValidateConfig(const ScenarioConfig& config) {
  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorCode::kInvalidParameter, message);
  };
  require(config.k >= 1, "k must be >= 1");
  require(config.n_requests >= 1, "n_requests must be >= 1");
  require(config.replications >= 1, "replications must be >= 1");
  require(config.alpha >= 1 && config.alpha <= config.beta,
          "bandwidth range needs 1 <= alpha <= beta");
  require(config.gb >= 0, "guard band must be >= 0");
  require(config.threads >= 1, "threads must be >= 1");
  require(config.scheme.empty() ||
              static_cast<int>(config.scheme.size()) == config.k,
          "scheme must have k entries");
}

RoutingScheme SchemeOf(const ScenarioConfig& config) {
  if (config.scheme.empty()) return RoutingScheme::Vertex(config.k, 1);
  return RoutingScheme(config.scheme);
}

std::uint64_t ReplicationSeed(const ScenarioConfig& config, int replication) {
  return MixSeed({config.seed, StableHash(config.name), config.grid_index,
                  static_cast<std::uint64_t>(replication)});
}

PreparedScenario PrepareScenario(const ScenarioConfig& config) {
  ValidateConfig(config);
  Topology topology = ResolveTopology(config.topology);
  TrafficDistribution traffic = MakeTraffic(config.traffic, topology);
  CandidatePathTable table = AllCandidatePaths(topology, config.k);
  ConflictMatrix cm = ComputeConflictMatrix(table, traffic);
  return PreparedScenario{std::move(topology), std::move(traffic),
                          std::move(table), std::move(cm)};
}

ReplicationRecord RunReplication(const PreparedScenario& prepared,
                                 const ScenarioConfig& config,
                                 int replication) {
  const RoutingScheme scheme = SchemeOf(config);
  ReplicationRecord record;
  record.index = replication;
  record.seed = ReplicationSeed(config, replication);

  Rng traffic_rng = MakeStream(record.seed, StreamTag::kTraffic);
  Rng routing_rng = MakeStream(record.seed, StreamTag::kRouting);
  const std::vector<Request> requests =
      SampleRequests(prepared.traffic, config.alpha, config.beta,
                     config.n_requests, traffic_rng);
  const std::vector<RoutedRequest> routed =
      RouteRequests(requests, prepared.table, scheme, routing_rng);
  const ConflictGraph graph = BuildConflictGraph(routed);
  record.edges = graph.edge_count();
  if (graph.size() >= 2) record.p_emp = EmpiricalIntersectingProbability(graph);

  const SpectrumAssignment assignment =
      FirstFitAssignment(graph, config.gb, config.order);
  const ValidationReport report =
      ValidateAssignment(graph, assignment, config.gb);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvariant,
                "replication " + std::to_string(replication) + " of " +
                    config.name + " produced an invalid assignment: " +
                    report.violations.front().message);
  }
  record.mufi = Mufi(assignment);
  return record;
}

ScenarioResult RunScenario(const PreparedScenario& prepared,
                           const ScenarioConfig& config) {
  ValidateConfig(config);
  ScenarioResult result;
  result.config = config;
  result.p_theory = EvaluateGof(prepared.cm, SchemeOf(config));
  result.replications.resize(static_cast<std::size_t>(config.replications));

  const int workers = std::min(config.threads, config.replications);
  if (workers <= 1) {
    for (int r = 0; r < config.replications; ++r) {
      result.replications[static_cast<std::size_t>(r)] =
          RunReplication(prepared, config, r);
    }
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = w; r < config.replications; r += workers) {
            result.replications[static_cast<std::size_t>(r)] =
                RunReplication(prepared, config, r);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (config.n_requests < 2) {
    result.warnings.push_back(
        "fewer than 2 requests: empirical intersecting probability undefined");
  }
  Aggregate(result);
  return result;
}

ScenarioResult RunScenario(const ScenarioConfig& config) {
  return RunScenario(PrepareScenario(config), config);
}

std::vector<double> DefaultP1Grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

std::vector<ScenarioResult> SweepP1(const ScenarioConfig& config,
                                    std::span<const double> grid) {
  if (config.k != 2) {
    throw Error(ErrorCode::kInvalidParameter, "p1 sweep needs k = 2");
  }
  for (double p1 : grid) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
      throw Error(ErrorCode::kInvalidParameter, "sweep grid outside [0,1]");
    }
  }
  const PreparedScenario prepared = PrepareScenario(config);
  std::vector<ScenarioResult> results;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ScenarioConfig point = config;
    point.scheme = {grid[i], 1.0 - grid[i]};
    point.grid_index = i;
    results.push_back(RunScenario(prepared, point));
  }
  return results;
}

std::vector<ScenarioConfig> ScenarioPresets() {
  return {
      Preset("R-U", "ring12", TrafficSpec{}),
      Preset("NSF-U", "nsfnet14", TrafficSpec{}),
      Preset("NJ-U", "njlata11", TrafficSpec{}),
      Preset("R-W", "ring12", Weighted(1, 7)),
      Preset("NSF-W", "nsfnet14", Weighted(2, 14)),
      Preset("NJ-W", "njlata11", Weighted(5, 8)),
  };
}

ScenarioConfig Example1Preset() {
  return Preset("EX1", "cycle8",
                TrafficSpec{TrafficKind::kSinglePair, 1, 4, 0.45, {}});
}

ScenarioConfig FindPreset(std::string_view name) {
  const std::string wanted = Lower(name);
  std::vector<ScenarioConfig> all = ScenarioPresets();
  all.push_back(Example1Preset());
  for (ScenarioConfig& config : all) {
    if (Lower(config.name) == wanted) return config;
  }
  throw Error(ErrorCode::kInvalidParameter,
              "unknown preset '" + std::string(name) + "'");
}

MinimumProbabilityTable ComputeMinimumProbabilityTable() {
  MinimumProbabilityTable table;
  for (const ScenarioConfig& config : ScenarioPresets()) {
    const Topology topology = ResolveTopology(config.topology);
    const TrafficDistribution traffic = MakeTraffic(config.traffic, topology);
    ConflictMatrix cm =
        ComputeConflictMatrix(AllCandidatePaths(topology, config.k), traffic);
    GofSolution solution = MinimizeGof(cm);
    table.entries.push_back({config.name, std::move(cm), std::move(solution)});
  }
  std::vector<const MinimumProbabilityEntry*> sorted;
  for (const auto& e : table.entries) sorted.push_back(&e);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return a->solution.p_min < b->solution.p_min;
  });
  for (const auto* e : sorted) table.increasing_order.push_back(e->scenario);
  return table;
}

std::string FormatDouble(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                 value);
  return std::string(buffer.data(), ptr);
}

std::string ResultsToCsv(std::span<const ScenarioResult> results) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ScenarioResult& r : results) {
    const RoutingScheme scheme = SchemeOf(r.config);
    out << r.config.name << ',' << FormatDouble(scheme[0]) << ','
        << FormatDouble(r.mean_mufi) << ',' << FormatDouble(r.mufi_ci) << ','
        << (r.mean_p_emp ? FormatDouble(*r.mean_p_emp) : "") << ','
        << (r.p_emp_ci ? FormatDouble(*r.p_emp_ci) : "") << ','
        << FormatDouble(r.p_theory) << ',' << r.replications.size() << ','
        << r.config.seed << "\n";
  }
  return out.str();
}

void ExportResults(std::span<const ScenarioResult> results, ExportFormat format,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kValidation, "cannot write " + path.string());
  }
  if (format == ExportFormat::kCsv) {
    out << ResultsToCsv(results);
  } else {
    out << ResultsToJson(results) << "\n";
  }
  if (!out) throw Error(ErrorCode::kValidation, "write failed: " + path.string());
}

}  // namespace eon
