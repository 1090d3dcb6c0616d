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

// JSON documents for conflict graphs, routed requests, assignments,
// conflict matrices and scenario results. Vertex ids are 0-based; path ranks
// and node ids are 1-based. Readers throw kParse on malformed documents.

#ifndef EON_JSON_IO_H_
#define EON_JSON_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eon/conflict.h"
#include "eon/harness.h"
#include "eon/rsa.h"
#include "eon/topology.h"

namespace eon {

// {"weights": [...], "edges": [[u, v], ...]}
std::string ConflictGraphToJson(const ConflictGraph& graph);
ConflictGraph ConflictGraphFromJson(std::string_view text);

// {"requests": [{"source", "destination", "bandwidth", "path_index",
//                "path": [nodes]}, ...]}
std::string RoutedRequestsToJson(std::span<const RoutedRequest> routed);
// Paths are rebuilt (and validated) against the topology.
std::vector<RoutedRequest> RoutedRequestsFromJson(std::string_view text,
                                                  const Topology& topology);

// {"gb": g, "mufi": m, "intervals": [[start, end], ...]}
std::string AssignmentToJson(const SpectrumAssignment& assignment, int gb);
SpectrumAssignment AssignmentFromJson(std::string_view text);

// {"k": k, "values": [[row], ...]}. The reader also takes a bare nested
// array.
std::string ConflictMatrixToJson(const ConflictMatrix& cm);
ConflictMatrix ConflictMatrixFromJson(std::string_view text);

std::string GofSolutionToJson(const GofSolution& solution);

std::string ResultsToJson(std::span<const ScenarioResult> results);
std::vector<ScenarioResult> ResultsFromJson(std::string_view text);

}  // namespace eon

#endif  // EON_JSON_IO_H_
