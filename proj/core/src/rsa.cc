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

#include "eon/rsa.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "eon/error.h"

namespace eon {
namespace {

std::size_t At(int index) { return static_cast<std::size_t>(index); }

// Visiting order for first-fit. Stable: ties keep index order.
std::vector<int> VisitOrder(const ConflictGraph& graph, FirstFitOrder order) {
  std::vector<int> vertices(At(graph.size()));
  std::iota(vertices.begin(), vertices.end(), 0);
  switch (order) {
    case FirstFitOrder::kInput:
      break;
    case FirstFitOrder::kDescendingWeight:
      std::stable_sort(vertices.begin(), vertices.end(), [&](int a, int b) {
        return graph.weight(a) > graph.weight(b);
      });
      break;
    case FirstFitOrder::kDescendingDegree:
      std::stable_sort(vertices.begin(), vertices.end(), [&](int a, int b) {
        return graph.degree(a) > graph.degree(b);
      });
      break;
  }
  return vertices;
}

// Forbidden start range for a block of `weight` next to `placed`:
// [placed.start - gb - weight + 1, placed.end + gb].
struct Blocked {
  int lo;
  int hi;
};

// Lowest start >= 1 outside every blocked range. Sorts `blocked`.
int LowestFreeStart(std::vector<Blocked>& blocked) {
  std::sort(blocked.begin(), blocked.end(),
            [](const Blocked& a, const Blocked& b) { return a.lo < b.lo; });
  int start = 1;
  for (const Blocked& b : blocked) {
    if (b.lo > start) break;
    start = std::max(start, b.hi + 1);
  }
  return start;
}

int PlaceLowest(const ConflictGraph& graph, int v, int gb,
                const std::vector<Interval>& intervals,
                const std::vector<char>& placed, std::vector<Blocked>& scratch) {
  scratch.clear();
  const int w = graph.weight(v);
  for (int u : graph.Neighbors(v)) {
    if (!placed[At(u)]) continue;
    const Interval& iv = intervals[At(u)];
    scratch.push_back({iv.start - gb - w + 1, iv.end + gb});
  }
  return LowestFreeStart(scratch);
}

void CheckGuardBand(int gb) {
  if (gb < 0) {
    throw Error(ErrorCode::kInvalidParameter, "guard band must be >= 0");
  }
}

// Colors are 1-based; color[v] == 0 means uncolored.
class DsaturState {
 public:
  explicit DsaturState(const ConflictGraph& graph)
      : graph_(graph),
        color_(At(graph.size()), 0),
        neighbor_color_count_(At(graph.size())),
        saturation_(At(graph.size()), 0) {}

  int color(int v) const { return color_[At(v)]; }
  int saturation(int v) const { return saturation_[At(v)]; }
  const std::vector<int>& colors() const { return color_; }

  bool ColorFree(int v, int c) const {
    const auto& counts = neighbor_color_count_[At(v)];
    return At(c) >= counts.size() || counts[At(c)] == 0;
  }

  // Uncolored vertex with maximum saturation; ties to the lowest index.
  int Select() const {
    int best = -1;
    for (int v = 0; v < graph_.size(); ++v) {
      if (color_[At(v)] != 0) continue;
      if (best < 0 || saturation_[At(v)] > saturation_[At(best)]) best = v;
    }
    return best;
  }

  void Assign(int v, int c) {
    color_[At(v)] = c;
    for (int u : graph_.Neighbors(v)) {
      auto& counts = neighbor_color_count_[At(u)];
      if (counts.size() <= At(c)) counts.resize(At(c) + 1, 0);
      if (counts[At(c)]++ == 0) ++saturation_[At(u)];
    }
  }

  void Unassign(int v) {
    const int c = color_[At(v)];
    color_[At(v)] = 0;
    for (int u : graph_.Neighbors(v)) {
      if (--neighbor_color_count_[At(u)][At(c)] == 0) --saturation_[At(u)];
    }
  }

 private:
  const ConflictGraph& graph_;
  std::vector<int> color_;
  std::vector<std::vector<int>> neighbor_color_count_;
  std::vector<int> saturation_;
};

int GreedyCliqueSize(const ConflictGraph& graph) {
  int best = graph.size() > 0 ? 1 : 0;
  for (int seed = 0; seed < graph.size(); ++seed) {
    std::vector<int> clique{seed};
    std::vector<int> candidates(graph.Neighbors(seed).begin(),
                                graph.Neighbors(seed).end());
    while (!candidates.empty()) {
      // Take the candidate with the most neighbors among the candidates.
      int pick = candidates.front();
      int pick_score = -1;
      for (int c : candidates) {
        int score = 0;
        for (int d : candidates) score += graph.Adjacent(c, d) ? 1 : 0;
        if (score > pick_score) {
          pick = c;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::vector<int> next;
      for (int c : candidates) {
        if (c != pick && graph.Adjacent(c, pick)) next.push_back(c);
      }
      candidates = std::move(next);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

class ExactColorer {
 public:
  ExactColorer(const ConflictGraph& graph, Coloring initial, int lower_bound)
      : graph_(graph),
        state_(graph),
        best_(std::move(initial)),
        lower_bound_(lower_bound) {}

  Coloring Run() {
    if (best_.num_colors > lower_bound_) Search(0, 0);
    return best_;
  }

 private:
  void Search(int colored, int used) {
    if (done_) return;
    if (colored == graph_.size()) {
      best_.color = state_.colors();
      best_.num_colors = used;
      if (used <= lower_bound_) done_ = true;
      return;
    }
    const int v = state_.Select();
    const int limit = std::min(used + 1, best_.num_colors - 1);
    for (int c = 1; c <= limit && !done_; ++c) {
      if (!state_.ColorFree(v, c)) continue;
      state_.Assign(v, c);
      Search(colored + 1, std::max(used, c));
      state_.Unassign(v);
    }
  }

  const ConflictGraph& graph_;
  DsaturState state_;
  Coloring best_;
  int lower_bound_;
  bool done_ = false;
};

class MufiSearch {
 public:
  MufiSearch(const ConflictGraph& graph, int gb, int best)
      : graph_(graph),
        gb_(gb),
        best_(best),
        intervals_(At(graph.size())),
        placed_(At(graph.size()), 0) {}

  int Run() {
    Search(0, 0);
    return best_;
  }

 private:
  // Replaying any optimal assignment in order of start index, each vertex at
  // its lowest feasible start, never ends later. So searching orderings with
  // lowest-start placement is exact.
  void Search(int depth, int current) {
    if (depth == graph_.size()) {
      best_ = std::min(best_, current);
      return;
    }
    int heaviest_left = 0;
    for (int v = 0; v < graph_.size(); ++v) {
      if (!placed_[At(v)]) heaviest_left = std::max(heaviest_left, graph_.weight(v));
    }
    if (std::max(current, heaviest_left) >= best_) return;
    for (int v = 0; v < graph_.size(); ++v) {
      if (placed_[At(v)]) continue;
      const int start = PlaceLowest(graph_, v, gb_, intervals_, placed_, scratch_);
      const int end = start + graph_.weight(v) - 1;
      if (end >= best_) continue;
      intervals_[At(v)] = {start, end};
      placed_[At(v)] = 1;
      Search(depth + 1, std::max(current, end));
      placed_[At(v)] = 0;
    }
  }

  const ConflictGraph& graph_;
  int gb_;
  int best_;
  std::vector<Interval> intervals_;
  std::vector<char> placed_;
  std::vector<Blocked> scratch_;
};

}  // namespace

std::vector<RoutedRequest> RouteRequests(std::span<const Request> requests,
                                         const CandidatePathTable& table,
                                         const RoutingScheme& scheme,
                                         Rng& rng) {
  if (scheme.k() != table.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme has " + std::to_string(scheme.k()) +
                    " entries, candidate table has k = " +
                    std::to_string(table.k()));
  }
  std::vector<double> cumulative(At(scheme.k()));
  std::partial_sum(scheme.probabilities().begin(), scheme.probabilities().end(),
                   cumulative.begin());
  // Ranks with zero probability are never chosen.
  int last_positive = 0;
  for (int i = 0; i < scheme.k(); ++i) {
    if (scheme[i] > 0.0) last_positive = i;
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<RoutedRequest> routed;
  routed.reserve(requests.size());
  for (const Request& r : requests) {
    const double u = unit(rng);
    int rank = last_positive;
    for (int i = 0; i < scheme.k(); ++i) {
      if (scheme[i] > 0.0 && u < cumulative[At(i)]) {
        rank = i;
        break;
      }
    }
    routed.push_back({r, rank + 1, table.PathAt(r.source, r.destination, rank + 1)});
  }
  return routed;
}

ConflictGraph::ConflictGraph(std::vector<int> weights)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {}

void ConflictGraph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw Error(ErrorCode::kValidation, "edge endpoint outside the graph");
  }
  if (u == v) throw Error(ErrorCode::kValidation, "self-edge in conflict graph");
  auto& list = adjacency_[At(u)];
  if (std::find(list.begin(), list.end(), v) != list.end()) return;
  list.push_back(v);
  adjacency_[At(v)].push_back(u);
  ++edge_count_;
}

void ConflictGraph::Finalize() {
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool ConflictGraph::Adjacent(int u, int v) const {
  const auto& list = adjacency_[At(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> ConflictGraph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(At(static_cast<int>(edge_count_)));
  for (int u = 0; u < size(); ++u) {
    for (int v : adjacency_[At(u)]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

ConflictGraph BuildConflictGraph(std::span<const LinkSet* const> paths,
                                 std::span<const int> weights) {
  if (paths.size() != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one weight per path is required");
  }
  const std::size_t n = paths.size();
  ConflictGraph graph(std::vector<int>(weights.begin(), weights.end()));
  std::size_t words = 0;
  for (const LinkSet* p : paths) words = std::max(words, p->words().size());

  // Pairs are visited with u < v, so appending keeps every list sorted and
  // duplicate checks are unnecessary.
  std::vector<std::vector<int>> adjacency(n);
  std::int64_t edges = 0;
  if (words <= 1) {
    std::vector<std::uint64_t> masks(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!paths[i]->words().empty()) masks[i] = paths[i]->words()[0];
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (masks[u] & masks[v]) {
          adjacency[u].push_back(static_cast<int>(v));
          adjacency[v].push_back(static_cast<int>(u));
          ++edges;
        }
      }
    }
  } else {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (paths[u]->Intersects(*paths[v])) {
          adjacency[u].push_back(static_cast<int>(v));
          adjacency[v].push_back(static_cast<int>(u));
          ++edges;
        }
      }
    }
  }
  graph.adjacency_ = std::move(adjacency);
  graph.edge_count_ = edges;
  return graph;
}

ConflictGraph BuildConflictGraph(std::span<const RoutedRequest> routed) {
  std::vector<const LinkSet*> paths;
  std::vector<int> weights;
  paths.reserve(routed.size());
  weights.reserve(routed.size());
  for (const RoutedRequest& r : routed) {
    paths.push_back(&r.path.link_set());
    weights.push_back(r.request.bandwidth);
  }
  return BuildConflictGraph(std::span<const LinkSet* const>(paths), weights);
}

double EmpiricalIntersectingProbability(const ConflictGraph& graph) {
  const std::int64_t n = graph.size();
  if (n < 2) {
    throw Error(ErrorCode::kDegenerateInput,
                "intersecting probability needs at least 2 requests");
  }
  return static_cast<double>(graph.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

bool IsProperColoring(const ConflictGraph& graph, const Coloring& coloring) {
  if (coloring.color.size() != At(graph.size())) return false;
  for (int v = 0; v < graph.size(); ++v) {
    const int c = coloring.color[At(v)];
    if (c < 1 || c > coloring.num_colors) return false;
    for (int u : graph.Neighbors(v)) {
      if (coloring.color[At(u)] == c) return false;
    }
  }
  return true;
}

Coloring GreedyColoring(const ConflictGraph& graph) {
  DsaturState state(graph);
  int used = 0;
  for (int step = 0; step < graph.size(); ++step) {
    const int v = state.Select();
    int c = 1;
    while (!state.ColorFree(v, c)) ++c;
    state.Assign(v, c);
    used = std::max(used, c);
  }
  return Coloring{state.colors(), used};
}

Coloring ExactColoring(const ConflictGraph& graph) {
  if (graph.size() > kMaxExactChromaticVertices) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "exact chromatic number supports at most " +
                    std::to_string(kMaxExactChromaticVertices) + " vertices");
  }
  if (graph.size() == 0) return Coloring{};
  ExactColorer colorer(graph, GreedyColoring(graph), GreedyCliqueSize(graph));
  return colorer.Run();
}

int ExactChromatic(const ConflictGraph& graph) {
  return ExactColoring(graph).num_colors;
}

int SpectrumDistance(const Interval& a, const Interval& b) {
  const int gap = std::max({0, a.start - b.end, b.start - a.end});
  return gap - 1;
}

SpectrumAssignment ColoringToAssignment(const ConflictGraph& graph,
                                        const Coloring& coloring, int gb) {
  CheckGuardBand(gb);
  if (!IsProperColoring(graph, coloring)) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring is not a proper coloring of the conflict graph");
  }
  std::vector<int> band(At(coloring.num_colors) + 1, 0);
  for (int v = 0; v < graph.size(); ++v) {
    int& width = band[At(coloring.color[At(v)])];
    width = std::max(width, graph.weight(v));
  }
  std::vector<int> band_start(band.size(), 0);
  int next = 1;
  for (std::size_t c = 1; c < band.size(); ++c) {
    if (band[c] == 0) continue;  // unused color
    band_start[c] = next;
    next += band[c] + gb;
  }
  SpectrumAssignment assignment;
  assignment.intervals.reserve(At(graph.size()));
  for (int v = 0; v < graph.size(); ++v) {
    const int start = band_start[At(coloring.color[At(v)])];
    assignment.intervals.push_back({start, start + graph.weight(v) - 1});
  }
  return assignment;
}

std::optional<FirstFitOrder> ParseFirstFitOrder(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (lower == "input") return FirstFitOrder::kInput;
  if (lower == "descending-weight") return FirstFitOrder::kDescendingWeight;
  if (lower == "descending-degree") return FirstFitOrder::kDescendingDegree;
  return std::nullopt;
}

std::string_view FirstFitOrderName(FirstFitOrder order) {
  switch (order) {
    case FirstFitOrder::kInput:
      return "input";
    case FirstFitOrder::kDescendingWeight:
      return "descending-weight";
    case FirstFitOrder::kDescendingDegree:
      return "descending-degree";
  }
  return "unknown";
}

SpectrumAssignment FirstFitAssignment(const ConflictGraph& graph, int gb,
                                      FirstFitOrder order) {
  CheckGuardBand(gb);
  SpectrumAssignment assignment;
  assignment.intervals.assign(At(graph.size()), Interval{});
  std::vector<char> placed(At(graph.size()), 0);
  std::vector<Blocked> scratch;
  for (int v : VisitOrder(graph, order)) {
    const int start =
        PlaceLowest(graph, v, gb, assignment.intervals, placed, scratch);
    assignment.intervals[At(v)] = {start, start + graph.weight(v) - 1};
    placed[At(v)] = 1;
  }
  return assignment;
}

int Mufi(const SpectrumAssignment& assignment) {
  if (assignment.intervals.empty()) {
    throw Error(ErrorCode::kDegenerateInput, "MUFI of an empty assignment");
  }
  int mufi = 0;
  for (const Interval& iv : assignment.intervals) mufi = std::max(mufi, iv.end);
  return mufi;
}

ValidationReport ValidateAssignment(const ConflictGraph& graph,
                                    const SpectrumAssignment& assignment,
                                    int gb) {
  if (assignment.intervals.size() != At(graph.size())) {
    throw Error(ErrorCode::kCoverageMismatch,
                "assignment has " + std::to_string(assignment.intervals.size()) +
                    " intervals for " + std::to_string(graph.size()) +
                    " vertices");
  }
  ValidationReport report;
  for (int v = 0; v < graph.size(); ++v) {
    const Interval& iv = assignment.intervals[At(v)];
    if (iv.start < 1) {
      report.violations.push_back({Violation::Kind::kStart, v, -1,
                                   "vertex " + std::to_string(v) +
                                       " starts at " + std::to_string(iv.start)});
    }
    if (iv.length() != graph.weight(v)) {
      report.violations.push_back(
          {Violation::Kind::kLength, v, -1,
           "vertex " + std::to_string(v) + " has length " +
               std::to_string(iv.length()) + ", weight " +
               std::to_string(graph.weight(v))});
    }
  }
  for (const auto& [u, v] : graph.Edges()) {
    const int distance = SpectrumDistance(assignment.intervals[At(u)],
                                          assignment.intervals[At(v)]);
    if (distance < gb) {
      report.violations.push_back(
          {Violation::Kind::kDistance, u, v,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") has distance " + std::to_string(distance) + " < " +
               std::to_string(gb)});
    }
  }
  return report;
}

std::pair<int, int> RangeMufiBounds(int chromatic, int gb, int alpha,
                                    int beta) {
  return {(chromatic - 1) * gb + chromatic * alpha,
          (chromatic - 1) * gb + chromatic * beta};
}

MufiBounds ComputeMufiBounds(const ConflictGraph& graph, int chromatic,
                             int gb) {
  if (chromatic < 1 || chromatic > graph.size()) {
    throw Error(ErrorCode::kInvalidParameter,
                "chromatic number outside [1, n]");
  }
  std::vector<int> weights(graph.weights().begin(), graph.weights().end());
  std::sort(weights.begin(), weights.end());
  const auto chi = At(chromatic);
  const int separators = (chromatic - 1) * gb;
  MufiBounds bounds;
  bounds.lower = separators + std::accumulate(weights.begin(),
                                              weights.begin() + chi, 0);
  bounds.upper = separators + std::accumulate(weights.end() - chi,
                                              weights.end(), 0);
  std::tie(bounds.range_lower, bounds.range_upper) =
      RangeMufiBounds(chromatic, gb, weights.front(), weights.back());
  return bounds;
}

int BruteForceOptimalMufi(const ConflictGraph& graph, int gb, int cap) {
  CheckGuardBand(gb);
  const int n = graph.size();
  if (n > kMaxBruteForceVertices) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "brute-force oracle supports at most " +
                    std::to_string(kMaxBruteForceVertices) + " vertices");
  }
  if (n == 0) {
    throw Error(ErrorCode::kDegenerateInput, "empty conflict graph");
  }
  const int max_weight =
      *std::max_element(graph.weights().begin(), graph.weights().end());
  if (cap <= 0) cap = n * max_weight + (n - 1) * gb;

  // A first-fit solution seeds the incumbent.
  const int seed =
      Mufi(FirstFitAssignment(graph, gb, FirstFitOrder::kDescendingWeight));
  const int best =
      MufiSearch(graph, gb, std::min(seed, cap + 1)).Run();
  if (best > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "optimal MUFI exceeds the search cap " + std::to_string(cap));
  }
  return best;
}

double PredictedChromatic(int n, double p) {
  if (n < 2) throw Error(ErrorCode::kDomain, "prediction needs n >= 2");
  if (!(p >= 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kDomain, "prediction needs p in [0, 1)");
  }
  const double nd = static_cast<double>(n);
  return 0.5 * std::log(1.0 / (1.0 - p)) * nd / std::log(nd);
}

}  // namespace eon
