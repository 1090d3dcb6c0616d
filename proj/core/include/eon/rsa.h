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

// Routing of sampled requests, conflict graphs, and spectrum assignment.
//
// Frequency slices (FS) are 1-based. A request of bandwidth w occupies the
// contiguous block [start, start + w - 1] on every link of its path. Two
// requests whose paths share a directed link need
//
//   distance(W_i, W_j) = min_{s in W_i, t in W_j} |s - t| - 1  >=  GB,
//
// so overlapping blocks (distance -1) always conflict. MUFI is the largest
// slice index in use.

#ifndef EON_RSA_H_
#define EON_RSA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eon/gof.h"
#include "eon/random.h"
#include "eon/topology.h"
#include "eon/traffic.h"

namespace eon {

struct RoutedRequest {
  Request request;
  // 1-based rank of the candidate path the request was assigned.
  int path_index = 1;
  Path path;
};

// Each request independently takes rank i with probability scheme[i-1].
// Exactly one draw from rng per request.
std::vector<RoutedRequest> RouteRequests(std::span<const Request> requests,
                                         const CandidatePathTable& table,
                                         const RoutingScheme& scheme, Rng& rng);

// Undirected, vertex-weighted, no self-edges. Adjacency lists are sorted.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::vector<int> weights);

  // Ignores duplicates. Throws kValidation on a self-edge or bad vertex.
  void AddEdge(int u, int v);
  // Sorts adjacency lists; call once after the last AddEdge.
  void Finalize();

  int size() const { return static_cast<int>(weights_.size()); }
  int weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  std::span<const int> weights() const { return weights_; }
  std::span<const int> Neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  bool Adjacent(int u, int v) const;
  std::int64_t edge_count() const { return edge_count_; }
  // Each edge once as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> Edges() const;

 private:
  friend ConflictGraph BuildConflictGraph(std::span<const LinkSet* const>,
                                          std::span<const int>);

  std::vector<int> weights_;
  std::vector<std::vector<int>> adjacency_;
  std::int64_t edge_count_ = 0;
};

// Edge {i,j} iff the routed paths share a directed link.
ConflictGraph BuildConflictGraph(std::span<const RoutedRequest> routed);
// Same rule on raw link sets; weights are the bandwidths.
ConflictGraph BuildConflictGraph(std::span<const LinkSet* const> paths,
                                 std::span<const int> weights);

// |E| / C(n,2). Throws kDegenerateInput for n < 2.
double EmpiricalIntersectingProbability(const ConflictGraph& graph);

struct Coloring {
  // Color of each vertex, 1-based.
  std::vector<int> color;
  int num_colors = 0;
};

bool IsProperColoring(const ConflictGraph& graph, const Coloring& coloring);

// DSATUR: repeatedly colors the uncolored vertex with the most distinct
// neighbor colors (ties to the lowest index) with its smallest free color.
Coloring GreedyColoring(const ConflictGraph& graph);

// Exact chromatic number and an optimal coloring, by DSATUR-ordered branch
// and bound. Throws kInstanceTooLarge beyond kMaxExactChromaticVertices.
inline constexpr int kMaxExactChromaticVertices = 50;
Coloring ExactColoring(const ConflictGraph& graph);
int ExactChromatic(const ConflictGraph& graph);

struct Interval {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// min over the two blocks of |s - t| - 1.
int SpectrumDistance(const Interval& a, const Interval& b);

struct SpectrumAssignment {
  // One block per conflict-graph vertex.
  std::vector<Interval> intervals;
};

// Stacks color classes: class c gets a band as wide as its heaviest vertex,
// consecutive bands separated by gb slices, every vertex starting at its
// band's first slice. Throws kImproperColoring.
SpectrumAssignment ColoringToAssignment(const ConflictGraph& graph,
                                        const Coloring& coloring, int gb);

enum class FirstFitOrder { kInput, kDescendingWeight, kDescendingDegree };

std::optional<FirstFitOrder> ParseFirstFitOrder(std::string_view name);
std::string_view FirstFitOrderName(FirstFitOrder order);

// Visits vertices in the given order (stable, ties by index) and gives each
// the lowest start that keeps distance >= gb from every already-placed
// neighbor.
SpectrumAssignment FirstFitAssignment(const ConflictGraph& graph, int gb,
                                      FirstFitOrder order);

// Throws kDegenerateInput on an empty assignment.
int Mufi(const SpectrumAssignment& assignment);

struct Violation {
  enum class Kind { kLength, kStart, kDistance };
  Kind kind;
  int u = -1;
  int v = -1;  // -1 for vertex violations
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Throws kCoverageMismatch if the assignment does not cover exactly the
// graph's vertices.
ValidationReport ValidateAssignment(const ConflictGraph& graph,
                                    const SpectrumAssignment& assignment,
                                    int gb);

struct MufiBounds {
  int lower = 0;
  int upper = 0;
  // Looser pair that only uses the weight range [alpha, beta].
  int range_lower = 0;
  int range_upper = 0;
};

// (chi-1) gb + chi*alpha and (chi-1) gb + chi*beta.
std::pair<int, int> RangeMufiBounds(int chromatic, int gb, int alpha,
                                    int beta);

// lower = (chi-1) gb + sum of the chi smallest weights,
// upper = (chi-1) gb + sum of the chi largest weights. The range pair uses
// the graph's smallest and largest weight as alpha and beta.
MufiBounds ComputeMufiBounds(const ConflictGraph& graph, int chromatic,
                             int gb);

inline constexpr int kMaxBruteForceVertices = 10;

// Minimum MUFI over all valid assignments. cap <= 0 selects the serial
// stacking bound n*max_weight + (n-1)*gb. Throws kInstanceTooLarge for
// n > kMaxBruteForceVertices and kCapExceeded if the optimum exceeds cap.
int BruteForceOptimalMufi(const ConflictGraph& graph, int gb, int cap = 0);

// Leading term of the random-graph chromatic number,
// (1/2) log(1/(1-p)) n / log n. Trend use only. Throws kDomain for p
// outside [0,1) or n < 2.
double PredictedChromatic(int n, double p);

}  // namespace eon

#endif  // EON_RSA_H_
