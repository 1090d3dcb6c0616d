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

#include "eon/topology.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "eon/error.h"

namespace eon {
namespace {

using Fiber = std::pair<NodeId, NodeId>;

// Adjacency of the shipped data files; see core/data/*.topo for provenance.
constexpr Fiber kNsfnetFibers[] = {
    {1, 2},  {1, 3},  {1, 4},   {1, 8},   {2, 3},   {2, 8},
    {3, 6},  {4, 5},  {4, 11},  {5, 6},   {5, 7},   {6, 10},
    {6, 13}, {7, 8},  {8, 9},   {9, 10},  {9, 12},  {9, 14},
    {11, 12}, {11, 14}, {12, 13}, {13, 14},
};

constexpr Fiber kNjLataFibers[] = {
    {1, 2}, {1, 3},  {2, 3},  {2, 4},  {2, 6},  {2, 11}, {3, 4},  {4, 6},
    {4, 8}, {4, 9},  {4, 11}, {5, 6},  {5, 7},  {5, 8},  {5, 10}, {5, 11},
    {6, 9}, {7, 8},  {7, 9},  {7, 10}, {8, 10}, {8, 11}, {9, 10},
};

std::vector<Link> Bidirectional(std::span<const Fiber> fibers) {
  std::vector<Link> links;
  links.reserve(fibers.size() * 2);
  for (const auto& [u, v] : fibers) {
    links.push_back({u, v});
    links.push_back({v, u});
  }
  return links;
}

std::vector<int> BfsDistances(int node_count, NodeId root,
                              const std::vector<std::vector<NodeId>>& adj) {
  std::vector<int> dist(static_cast<std::size_t>(node_count) + 1, -1);
  std::deque<NodeId> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

int ParseInt(const std::string& token, int line_number) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                       ": expected integer, got '" + token +
                                       "'");
  }
}

// Lexicographically smallest shortest path from `from` to `to` that avoids
// blocked nodes and blocked links. Empty if none exists.
std::vector<NodeId> LexShortestPath(const Topology& t, NodeId from, NodeId to,
                                    const std::vector<char>& blocked_node,
                                    const std::vector<char>& blocked_link) {
  const int n = t.node_count();
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
  std::deque<NodeId> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : t.Predecessors(v)) {
      if (dist[u] >= 0 || blocked_node[u]) continue;
      if (blocked_link[t.LinkIndex(u, v)]) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  if (dist[from] < 0) return {};
  std::vector<NodeId> path{from};
  NodeId u = from;
  while (u != to) {
    for (NodeId v : t.Successors(u)) {
      if (blocked_node[v] || blocked_link[t.LinkIndex(u, v)]) continue;
      if (dist[v] == dist[u] - 1) {
        u = v;
        break;
      }
    }
    path.push_back(u);
  }
  return path;
}

struct CanonicalLess {
  bool operator()(const std::vector<NodeId>& a,
                  const std::vector<NodeId>& b) const {
    return CanonicalPathLess(a, b);
  }
};

}  // namespace

Topology::Topology(std::string name, int node_count, std::vector<Link> links)
    : name_(std::move(name)), node_count_(node_count), links_(std::move(links)) {
  if (node_count_ < 2) {
    throw Error(ErrorCode::kValidation, "topology needs at least 2 nodes");
  }
  for (const Link& l : links_) {
    if (!HasNode(l.from) || !HasNode(l.to)) {
      throw Error(ErrorCode::kValidation,
                  "link (" + std::to_string(l.from) + "," +
                      std::to_string(l.to) + ") references an unknown node");
    }
    if (l.from == l.to) {
      throw Error(ErrorCode::kValidation,
                  "self-loop on node " + std::to_string(l.from));
    }
  }
  std::sort(links_.begin(), links_.end());
  auto dup = std::adjacent_find(links_.begin(), links_.end());
  if (dup != links_.end()) {
    throw Error(ErrorCode::kValidation,
                "duplicate link (" + std::to_string(dup->from) + "," +
                    std::to_string(dup->to) + ")");
  }
  out_.assign(static_cast<std::size_t>(node_count_) + 1, {});
  in_.assign(static_cast<std::size_t>(node_count_) + 1, {});
  for (const Link& l : links_) {
    out_[l.from].push_back(l.to);
    in_[l.to].push_back(l.from);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());

  // Strong connectivity: everything reachable from node 1 both ways.
  for (const auto* adj : {&out_, &in_}) {
    std::vector<int> dist = BfsDistances(node_count_, 1, *adj);
    for (NodeId v = 1; v <= node_count_; ++v) {
      if (dist[v] < 0) {
        throw Error(ErrorCode::kValidation,
                    "topology '" + name_ + "' is not strongly connected (node " +
                        std::to_string(v) + ")");
      }
    }
  }
}

int Topology::LinkIndex(NodeId from, NodeId to) const {
  auto it = std::lower_bound(links_.begin(), links_.end(), Link{from, to});
  if (it == links_.end() || *it != Link{from, to}) return -1;
  return static_cast<int>(it - links_.begin());
}

Topology MakeBuiltinTopology(BuiltinTopology which) {
  switch (which) {
    case BuiltinTopology::kRing12: {
      std::vector<Fiber> fibers;
      for (NodeId v = 1; v <= 12; ++v) fibers.emplace_back(v, v % 12 + 1);
      return Topology("ring12", 12, Bidirectional(fibers));
    }
    case BuiltinTopology::kNsfnet14:
      return Topology("nsfnet14", 14, Bidirectional(kNsfnetFibers));
    case BuiltinTopology::kNjLata11:
      return Topology("njlata11", 11, Bidirectional(kNjLataFibers));
  }
  throw Error(ErrorCode::kInvalidParameter, "unknown builtin topology");
}

std::optional<BuiltinTopology> ParseBuiltinTopologyName(std::string_view name) {
  const std::string n = Lower(name);
  if (n == "ring12" || n == "ring") return BuiltinTopology::kRing12;
  if (n == "nsfnet14" || n == "nsfnet" || n == "nsf") {
    return BuiltinTopology::kNsfnet14;
  }
  if (n == "njlata11" || n == "njlata" || n == "nj" || n == "nj-lata") {
    return BuiltinTopology::kNjLata11;
  }
  return std::nullopt;
}

std::string_view BuiltinTopologyFileName(BuiltinTopology which) {
  switch (which) {
    case BuiltinTopology::kRing12:
      return "ring12.topo";
    case BuiltinTopology::kNsfnet14:
      return "nsfnet14.topo";
    case BuiltinTopology::kNjLata11:
      return "njlata11.topo";
  }
  return "";
}

Topology ParseTopology(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  std::optional<int> node_count;
  std::vector<Link> links;
  std::set<Link> seen;
  auto add = [&](NodeId u, NodeId v, int ln) {
    if (!seen.insert({u, v}).second) {
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(ln) + ": duplicate link (" +
                      std::to_string(u) + "," + std::to_string(v) + ")");
    }
    links.push_back({u, v});
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string keyword = Lower(tok[0]);
    if (keyword == "nodes") {
      if (tok.size() != 2 || node_count) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                           ": expected a single 'nodes <N>'");
      }
      node_count = ParseInt(tok[1], line_number);
    } else if (keyword == "link") {
      if (!node_count) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                           ": 'link' before 'nodes'");
      }
      if (tok.size() < 3 || tok.size() > 4) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                           ": expected 'link <u> <v> [bidir|uni]'");
      }
      NodeId u = ParseInt(tok[1], line_number);
      NodeId v = ParseInt(tok[2], line_number);
      std::string mode = tok.size() == 4 ? Lower(tok[3]) : "bidir";
      if (mode != "bidir" && mode != "uni") {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                           ": unknown link mode '" + tok[3] +
                                           "'");
      }
      add(u, v, line_number);
      if (mode == "bidir") add(v, u, line_number);
    } else {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) +
                                         ": unknown keyword '" + tok[0] + "'");
    }
  }
  if (!node_count) throw Error(ErrorCode::kParse, "missing 'nodes <N>' header");
  return Topology(std::move(name), *node_count, std::move(links));
}

Topology LoadTopologyFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open topology file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTopology(buffer.str(), path.stem().string());
}

std::string FormatTopology(const Topology& topology) {
  std::ostringstream out;
  out << "# " << topology.name() << "\n";
  out << "nodes " << topology.node_count() << "\n";
  for (const Link& l : topology.links()) {
    const bool reciprocal = topology.HasLink(l.to, l.from);
    if (reciprocal && l.from > l.to) continue;
    out << "link " << l.from << " " << l.to << (reciprocal ? "" : " uni")
        << "\n";
  }
  return out.str();
}

Topology MakeCycleTopology(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidParameter, "a cycle needs n >= 3");
  std::vector<Fiber> fibers;
  for (NodeId v = 1; v <= n; ++v) fibers.emplace_back(v, v % n + 1);
  return Topology("cycle" + std::to_string(n), n, Bidirectional(fibers));
}

Topology ResolveTopology(std::string_view name_or_path) {
  if (auto builtin = ParseBuiltinTopologyName(name_or_path)) {
    return MakeBuiltinTopology(*builtin);
  }
  constexpr std::string_view kCycle = "cycle";
  if (name_or_path.size() > kCycle.size() &&
      name_or_path.substr(0, kCycle.size()) == kCycle) {
    const std::string_view digits = name_or_path.substr(kCycle.size());
    if (std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 6) {
      return MakeCycleTopology(std::stoi(std::string(digits)));
    }
  }
  return LoadTopologyFile(std::filesystem::path(name_or_path));
}

Path::Path(const Topology& topology, std::vector<NodeId> nodes)
    : nodes_(std::move(nodes)), link_set_(topology.link_count()) {
  if (nodes_.size() < 2) {
    throw Error(ErrorCode::kValidation, "a path needs at least one link");
  }
  std::vector<char> visited(static_cast<std::size_t>(topology.node_count()) + 1,
                            0);
  for (NodeId v : nodes_) {
    if (!topology.HasNode(v)) {
      throw Error(ErrorCode::kValidation,
                  "path visits unknown node " + std::to_string(v));
    }
    if (visited[v]++) {
      throw Error(ErrorCode::kValidation,
                  "path revisits node " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    int index = topology.LinkIndex(nodes_[i], nodes_[i + 1]);
    if (index < 0) {
      throw Error(ErrorCode::kValidation,
                  "no link (" + std::to_string(nodes_[i]) + "," +
                      std::to_string(nodes_[i + 1]) + ")");
    }
    link_set_.Insert(index);
  }
}

std::vector<Link> Path::links() const {
  std::vector<Link> out;
  out.reserve(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    out.push_back({nodes_[i], nodes_[i + 1]});
  }
  return out;
}

bool CanonicalPathLess(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Path> KShortestPaths(const Topology& topology, NodeId source,
                                 NodeId destination, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be positive");
  if (!topology.HasNode(source) || !topology.HasNode(destination)) {
    throw Error(ErrorCode::kInvalidParameter, "endpoint not in topology");
  }
  if (source == destination) {
    throw Error(ErrorCode::kInvalidParameter, "source equals destination");
  }
  const std::size_t node_slots =
      static_cast<std::size_t>(topology.node_count()) + 1;
  std::vector<char> blocked_node(node_slots, 0);
  std::vector<char> blocked_link(
      static_cast<std::size_t>(topology.link_count()), 0);

  std::vector<std::vector<NodeId>> accepted;
  std::vector<NodeId> first = LexShortestPath(topology, source, destination,
                                              blocked_node, blocked_link);
  if (first.empty()) {
    throw Error(ErrorCode::kNoPath, "node " + std::to_string(destination) +
                                        " unreachable from " +
                                        std::to_string(source));
  }
  accepted.push_back(std::move(first));
  std::set<std::vector<NodeId>, CanonicalLess> candidates;

  while (static_cast<int>(accepted.size()) < k) {
    const std::vector<NodeId> last = accepted.back();
    for (std::size_t i = 0; i + 1 < last.size(); ++i) {
      const NodeId spur = last[i];
      std::fill(blocked_node.begin(), blocked_node.end(), 0);
      std::fill(blocked_link.begin(), blocked_link.end(), 0);
      for (std::size_t j = 0; j < i; ++j) blocked_node[last[j]] = 1;
      for (const auto& p : accepted) {
        if (p.size() > i + 1 && std::equal(p.begin(), p.begin() + i + 1,
                                           last.begin())) {
          blocked_link[topology.LinkIndex(p[i], p[i + 1])] = 1;
        }
      }
      std::vector<NodeId> tail = LexShortestPath(topology, spur, destination,
                                                 blocked_node, blocked_link);
      if (tail.empty()) continue;
      std::vector<NodeId> candidate(last.begin(), last.begin() + i);
      candidate.insert(candidate.end(), tail.begin(), tail.end());
      if (std::find(accepted.begin(), accepted.end(), candidate) ==
          accepted.end()) {
        candidates.insert(std::move(candidate));
      }
    }
    if (candidates.empty()) break;
    accepted.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }

  std::vector<Path> paths;
  paths.reserve(accepted.size());
  for (auto& nodes : accepted) paths.emplace_back(topology, std::move(nodes));
  return paths;
}

CandidatePathTable::CandidatePathTable(int node_count, int k,
                                       std::vector<std::vector<Path>> entries)
    : node_count_(node_count), k_(k), entries_(std::move(entries)) {
  if (k_ < 1) throw Error(ErrorCode::kInvalidParameter, "k must be positive");
  if (entries_.size() !=
      static_cast<std::size_t>(node_count_) * static_cast<std::size_t>(node_count_)) {
    throw Error(ErrorCode::kDimensionMismatch, "candidate table size mismatch");
  }
}

const Path& CandidatePathTable::PathAt(NodeId source, NodeId destination,
                                       int rank) const {
  if (rank < 1 || rank > k_) {
    throw Error(ErrorCode::kIndex, "path rank " + std::to_string(rank) +
                                       " outside [1, " + std::to_string(k_) +
                                       "]");
  }
  if (source == destination || source < 1 || destination < 1 ||
      source > node_count_ || destination > node_count_) {
    throw Error(ErrorCode::kIndex, "no candidate entry for (" +
                                       std::to_string(source) + "," +
                                       std::to_string(destination) + ")");
  }
  const auto& entry = entries_[Slot(source, destination)];
  return entry[static_cast<std::size_t>(
      std::min<int>(rank, static_cast<int>(entry.size())) - 1)];
}

CandidatePathTable AllCandidatePaths(const Topology& topology, int k) {
  const int n = topology.node_count();
  std::vector<std::vector<Path>> entries(static_cast<std::size_t>(n) *
                                         static_cast<std::size_t>(n));
  for (NodeId s = 1; s <= n; ++s) {
    for (NodeId d = 1; d <= n; ++d) {
      if (s == d) continue;
      entries[static_cast<std::size_t>((s - 1) * n + (d - 1))] =
          KShortestPaths(topology, s, d, k);
    }
  }
  return CandidatePathTable(n, k, std::move(entries));
}

}  // namespace eon
