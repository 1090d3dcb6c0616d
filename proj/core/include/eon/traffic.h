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

#ifndef EON_TRAFFIC_H_
#define EON_TRAFFIC_H_

#include <filesystem>
#include <random>
#include <string_view>
#include <vector>

#include "eon/random.h"
#include "eon/topology.h"

namespace eon {

struct NodePair {
  NodeId source = 0;
  NodeId destination = 0;

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct PairWeight {
  NodePair pair;
  double weight = 0.0;
};

inline constexpr double kSimplexTolerance = 1e-9;

// Occurrence probabilities of ordered source-destination pairs.
class TrafficDistribution {
 public:
  // Pairs not listed weigh 0. Validates: pairs off-diagonal and in range,
  // weights in [0,1], no repeated pair, sum within kSimplexTolerance of 1.
  TrafficDistribution(int node_count, const std::vector<PairWeight>& weights);

  int node_count() const { return node_count_; }
  double Weight(NodeId source, NodeId destination) const {
    return weights_[Slot(source, destination)];
  }
  // All ordered off-diagonal pairs in (source, destination) order, including
  // zero-weight ones.
  std::vector<PairWeight> Pairs() const;
  // Only the pairs with positive weight, same order.
  std::vector<PairWeight> Support() const;

 private:
  std::size_t Slot(NodeId s, NodeId d) const {
    return static_cast<std::size_t>((s - 1) * node_count_ + (d - 1));
  }

  int node_count_;
  std::vector<double> weights_;
};

TrafficDistribution UniformDistribution(const Topology& topology);

// Two data-centre nodes each carry node marginal `dc_mass`; the remaining
// 1 - 2*dc_mass is shared equally by the other nodes. The source is drawn
// from the node marginal m and the destination from m restricted to nodes
// other than the source, so w(s,d) = m(s) m(d) / (1 - m(s)).
TrafficDistribution WeightedDistribution(const Topology& topology,
                                         NodeId dc_first, NodeId dc_second,
                                         double dc_mass = 0.45);

// Lines `pair <s> <d> <weight>`; '#' comments.
TrafficDistribution ParseTraffic(std::string_view text, int node_count);
TrafficDistribution LoadTrafficFile(const std::filesystem::path& path,
                                    int node_count);

struct Request {
  NodeId source = 0;
  NodeId destination = 0;
  // Frequency slices requested.
  int bandwidth = 0;

  friend bool operator==(const Request&, const Request&) = default;
};

// Draws (s,d) from the distribution, then an independent bandwidth uniform
// on the integers [alpha, beta]. Exactly two draws per request.
class RequestSampler {
 public:
  RequestSampler(const TrafficDistribution& distribution, int alpha, int beta);

  Request operator()(Rng& rng) const;

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

 private:
  std::vector<NodePair> pairs_;
  std::vector<double> cumulative_;
  int alpha_;
  int beta_;
};

Request SampleRequest(const TrafficDistribution& distribution, int alpha,
                      int beta, Rng& rng);

std::vector<Request> SampleRequests(const TrafficDistribution& distribution,
                                    int alpha, int beta, int count, Rng& rng);

}  // namespace eon

#endif  // EON_TRAFFIC_H_
