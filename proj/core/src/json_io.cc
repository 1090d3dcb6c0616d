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

#include "eon/json_io.h"

#include <json.hpp>

#include "eon/error.h"

namespace eon {
namespace {

using nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

// Wraps nlohmann type/lookup errors as kParse; eon errors pass through.
template <typename F>
auto Reading(F&& read) {
  try {
    return read();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

json OptionalNumber(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<double> ReadOptional(const json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<double>();
}

json ConfigToJson(const ScenarioConfig& c) {
  return json{{"name", c.name},
              {"topology", c.topology},
              {"traffic", FormatTrafficSpec(c.traffic)},
              {"k", c.k},
              {"scheme", c.scheme},
              {"n_requests", c.n_requests},
              {"replications", c.replications},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"gb", c.gb},
              {"seed", c.seed},
              {"grid_index", c.grid_index},
              {"order", std::string(FirstFitOrderName(c.order))},
              {"threads", c.threads}};
}

ScenarioConfig ConfigFromJson(const json& j) {
  ScenarioConfig c;
  c.name = j.at("name").get<std::string>();
  c.topology = j.at("topology").get<std::string>();
  c.traffic = ParseTrafficSpec(j.at("traffic").get<std::string>());
  c.k = j.at("k").get<int>();
  c.scheme = j.at("scheme").get<std::vector<double>>();
  c.n_requests = j.at("n_requests").get<int>();
  c.replications = j.at("replications").get<int>();
  c.alpha = j.at("alpha").get<int>();
  c.beta = j.at("beta").get<int>();
  c.gb = j.at("gb").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.grid_index = j.at("grid_index").get<std::uint64_t>();
  const auto order = ParseFirstFitOrder(j.at("order").get<std::string>());
  if (!order) throw Error(ErrorCode::kParse, "unknown first-fit order");
  c.order = *order;
  c.threads = j.at("threads").get<int>();
  return c;
}

}  // namespace

std::string ConflictGraphToJson(const ConflictGraph& graph) {
  json edges = json::array();
  for (const auto& [u, v] : graph.Edges()) edges.push_back({u, v});
  json j{{"weights", std::vector<int>(graph.weights().begin(),
                                      graph.weights().end())},
         {"edges", std::move(edges)}};
  return j.dump();
}

ConflictGraph ConflictGraphFromJson(std::string_view text) {
  const json j = Parse(text);
  return Reading([&] {
    ConflictGraph graph(j.at("weights").get<std::vector<int>>());
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "edge must be a [u, v] pair");
      }
      graph.AddEdge(e[0].get<int>(), e[1].get<int>());
    }
    graph.Finalize();
    return graph;
  });
}

std::string RoutedRequestsToJson(std::span<const RoutedRequest> routed) {
  json list = json::array();
  for (const RoutedRequest& r : routed) {
    list.push_back({{"source", r.request.source},
                    {"destination", r.request.destination},
                    {"bandwidth", r.request.bandwidth},
                    {"path_index", r.path_index},
                    {"path", std::vector<NodeId>(r.path.nodes().begin(),
                                                 r.path.nodes().end())}});
  }
  return json{{"requests", std::move(list)}}.dump();
}

std::vector<RoutedRequest> RoutedRequestsFromJson(std::string_view text,
                                                  const Topology& topology) {
  const json j = Parse(text);
  return Reading([&] {
    std::vector<RoutedRequest> routed;
    for (const json& r : j.at("requests")) {
      Request request{r.at("source").get<NodeId>(),
                      r.at("destination").get<NodeId>(),
                      r.at("bandwidth").get<int>()};
      Path path(topology, r.at("path").get<std::vector<NodeId>>());
      if (path.source() != request.source ||
          path.destination() != request.destination) {
        throw Error(ErrorCode::kValidation,
                    "path endpoints differ from the request");
      }
      routed.push_back({request, r.at("path_index").get<int>(), std::move(path)});
    }
    return routed;
  });
}

std::string AssignmentToJson(const SpectrumAssignment& assignment, int gb) {
  json intervals = json::array();
  for (const Interval& iv : assignment.intervals) {
    intervals.push_back({iv.start, iv.end});
  }
  json j{{"gb", gb}, {"intervals", std::move(intervals)}};
  if (!assignment.intervals.empty()) j["mufi"] = Mufi(assignment);
  return j.dump();
}

SpectrumAssignment AssignmentFromJson(std::string_view text) {
  const json j = Parse(text);
  return Reading([&] {
    SpectrumAssignment assignment;
    for (const json& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2) {
        throw Error(ErrorCode::kParse, "interval must be a [start, end] pair");
      }
      assignment.intervals.push_back({iv[0].get<int>(), iv[1].get<int>()});
    }
    return assignment;
  });
}

std::string ConflictMatrixToJson(const ConflictMatrix& cm) {
  json rows = json::array();
  for (int r = 0; r < cm.k(); ++r) {
    json row = json::array();
    for (int c = 0; c < cm.k(); ++c) row.push_back(cm(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"k", cm.k()}, {"values", std::move(rows)}}.dump();
}

ConflictMatrix ConflictMatrixFromJson(std::string_view text) {
  const json j = Parse(text);
  return Reading([&] {
    const json& rows = j.is_array() ? j : j.at("values");
    const int k = static_cast<int>(rows.size());
    std::vector<double> values;
    for (const json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != k) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "conflict matrix must be square");
      }
      for (const json& v : row) values.push_back(v.get<double>());
    }
    return ConflictMatrix(k, std::move(values));
  });
}

std::string GofSolutionToJson(const GofSolution& solution) {
  json j{{"scheme", std::vector<double>(solution.scheme.probabilities().begin(),
                                        solution.scheme.probabilities().end())},
         {"p_min", solution.p_min},
         {"certificate", std::string(CertificateName(solution.certificate))},
         {"singular_supports", solution.singular_supports}};
  return j.dump();
}

std::string ResultsToJson(std::span<const ScenarioResult> results) {
  json list = json::array();
  for (const ScenarioResult& r : results) {
    json reps = json::array();
    for (const ReplicationRecord& rec : r.replications) {
      reps.push_back({{"index", rec.index},
                      {"seed", rec.seed},
                      {"mufi", rec.mufi},
                      {"p_emp", OptionalNumber(rec.p_emp)},
                      {"edges", rec.edges}});
    }
    list.push_back({{"scenario", r.config.name},
                    {"config", ConfigToJson(r.config)},
                    {"seed", r.config.seed},
                    {"ci_method", r.ci_method},
                    {"aggregates",
                     {{"mean_mufi", r.mean_mufi},
                      {"mufi_ci", r.mufi_ci},
                      {"mean_p_emp", OptionalNumber(r.mean_p_emp)},
                      {"p_emp_ci", OptionalNumber(r.p_emp_ci)},
                      {"p_theory", r.p_theory}}},
                    {"warnings", r.warnings},
                    {"replications", std::move(reps)}});
  }
  return json{{"results", std::move(list)}}.dump(2);
}

std::vector<ScenarioResult> ResultsFromJson(std::string_view text) {
  const json j = Parse(text);
  return Reading([&] {
    std::vector<ScenarioResult> results;
    for (const json& r : j.at("results")) {
      ScenarioResult result;
      result.config = ConfigFromJson(r.at("config"));
      result.ci_method = r.at("ci_method").get<std::string>();
      const json& a = r.at("aggregates");
      result.mean_mufi = a.at("mean_mufi").get<double>();
      result.mufi_ci = a.at("mufi_ci").get<double>();
      result.mean_p_emp = ReadOptional(a.at("mean_p_emp"));
      result.p_emp_ci = ReadOptional(a.at("p_emp_ci"));
      result.p_theory = a.at("p_theory").get<double>();
      result.warnings = r.at("warnings").get<std::vector<std::string>>();
      for (const json& rec : r.at("replications")) {
        result.replications.push_back(
            {rec.at("index").get<int>(), rec.at("seed").get<std::uint64_t>(),
             rec.at("mufi").get<int>(), ReadOptional(rec.at("p_emp")),
             rec.at("edges").get<std::int64_t>()});
      }
      results.push_back(std::move(result));
    }
    return results;
  });
}

}  // namespace eon
