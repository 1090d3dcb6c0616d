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

#include "eon/traffic.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "eon/error.h"

namespace eon {

TrafficDistribution::TrafficDistribution(int node_count,
                                         const std::vector<PairWeight>& weights)
    : node_count_(node_count),
      weights_(static_cast<std::size_t>(std::max(node_count, 0)) *
                   static_cast<std::size_t>(std::max(node_count, 0)),
               0.0) {
  if (node_count_ < 2) {
    throw Error(ErrorCode::kValidation, "traffic needs at least 2 nodes");
  }
  std::vector<char> seen(weights_.size(), 0);
  double total = 0.0;
  for (const PairWeight& pw : weights) {
    const auto [s, d] = pw.pair;
    if (s < 1 || d < 1 || s > node_count_ || d > node_count_) {
      throw Error(ErrorCode::kValidation, "pair (" + std::to_string(s) + "," +
                                              std::to_string(d) +
                                              ") out of range");
    }
    if (s == d) {
      throw Error(ErrorCode::kValidation,
                  "diagonal pair (" + std::to_string(s) + "," +
                      std::to_string(d) + ") cannot carry weight");
    }
    if (!(pw.weight >= 0.0 && pw.weight <= 1.0)) {
      throw Error(ErrorCode::kValidation, "weight outside [0,1]");
    }
    if (seen[Slot(s, d)]++) {
      throw Error(ErrorCode::kValidation, "pair (" + std::to_string(s) + "," +
                                              std::to_string(d) +
                                              ") listed twice");
    }
    weights_[Slot(s, d)] = pw.weight;
    total += pw.weight;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pair weights sum to " << total << ", not 1";
    throw Error(ErrorCode::kValidation, msg.str());
  }
}

std::vector<PairWeight> TrafficDistribution::Pairs() const {
  std::vector<PairWeight> out;
  out.reserve(static_cast<std::size_t>(node_count_ * (node_count_ - 1)));
  for (NodeId s = 1; s <= node_count_; ++s) {
    for (NodeId d = 1; d <= node_count_; ++d) {
      if (s != d) out.push_back({{s, d}, Weight(s, d)});
    }
  }
  return out;
}

std::vector<PairWeight> TrafficDistribution::Support() const {
  std::vector<PairWeight> out = Pairs();
  std::erase_if(out, [](const PairWeight& pw) { return pw.weight <= 0.0; });
  return out;
}

TrafficDistribution UniformDistribution(const Topology& topology) {
  const int n = topology.node_count();
  const double w = 1.0 / (static_cast<double>(n) * (n - 1));
  std::vector<PairWeight> weights;
  for (NodeId s = 1; s <= n; ++s) {
    for (NodeId d = 1; d <= n; ++d) {
      if (s != d) weights.push_back({{s, d}, w});
    }
  }
  return TrafficDistribution(n, weights);
}

TrafficDistribution WeightedDistribution(const Topology& topology,
                                         NodeId dc_first, NodeId dc_second,
                                         double dc_mass) {
  const int n = topology.node_count();
  if (!topology.HasNode(dc_first) || !topology.HasNode(dc_second) ||
      dc_first == dc_second) {
    throw Error(ErrorCode::kInvalidParameter,
                "data-centre nodes must be two distinct nodes of the topology");
  }
  if (n < 3) {
    throw Error(ErrorCode::kInvalidParameter,
                "weighted traffic needs at least 3 nodes");
  }
  if (!(dc_mass >= 0.0 && 2.0 * dc_mass < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "dc_mass must satisfy 0 <= dc_mass < 0.5");
  }
  std::vector<double> marginal(static_cast<std::size_t>(n) + 1,
                               (1.0 - 2.0 * dc_mass) / (n - 2));
  marginal[dc_first] = dc_mass;
  marginal[dc_second] = dc_mass;

  std::vector<PairWeight> weights;
  double total = 0.0;
  for (NodeId s = 1; s <= n; ++s) {
    for (NodeId d = 1; d <= n; ++d) {
      if (s == d) continue;
      const double w = marginal[s] * marginal[d] / (1.0 - marginal[s]);
      weights.push_back({{s, d}, w});
      total += w;
    }
  }
  // Exact in real arithmetic; absorb rounding so the simplex check is tight.
  for (auto& pw : weights) pw.weight /= total;
  return TrafficDistribution(n, weights);
}

TrafficDistribution ParseTraffic(std::string_view text, int node_count) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  std::vector<PairWeight> weights;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    PairWeight pw;
    std::string rest;
    if (keyword != "pair" ||
        !(fields >> pw.pair.source >> pw.pair.destination >> pw.weight) ||
        (fields >> rest)) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_number) +
                      ": expected 'pair <s> <d> <weight>'");
    }
    weights.push_back(pw);
  }
  return TrafficDistribution(node_count, weights);
}

TrafficDistribution LoadTrafficFile(const std::filesystem::path& path,
                                    int node_count) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open traffic file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTraffic(buffer.str(), node_count);
}

RequestSampler::RequestSampler(const TrafficDistribution& distribution,
                               int alpha, int beta)
    : alpha_(alpha), beta_(beta) {
  if (alpha < 1 || beta < alpha) {
    throw Error(ErrorCode::kInvalidParameter,
                "bandwidth range needs 1 <= alpha <= beta");
  }
  double running = 0.0;
  for (const PairWeight& pw : distribution.Support()) {
    running += pw.weight;
    pairs_.push_back(pw.pair);
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

Request RequestSampler::operator()(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  const NodePair pair = pairs_[static_cast<std::size_t>(it - cumulative_.begin())];
  std::uniform_int_distribution<int> bandwidth(alpha_, beta_);
  return {pair.source, pair.destination, bandwidth(rng)};
}

Request SampleRequest(const TrafficDistribution& distribution, int alpha,
                      int beta, Rng& rng) {
  return RequestSampler(distribution, alpha, beta)(rng);
}

std::vector<Request> SampleRequests(const TrafficDistribution& distribution,
                                    int alpha, int beta, int count, Rng& rng) {
  RequestSampler sampler(distribution, alpha, beta);
  std::vector<Request> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(sampler(rng));
  return out;
}

}  // namespace eon
