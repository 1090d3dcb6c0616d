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

// Network topology model and candidate-path computation.
//
// Nodes are 1-based integers. A topology is a set of directed fiber links;
// a bidirectional fiber is two directed links. Paths are simple and are
// ranked by hop count, ties broken by lexicographic node sequence.

#ifndef EON_TOPOLOGY_H_
#define EON_TOPOLOGY_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eon {

using NodeId = int;

struct Link {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Link&, const Link&) = default;
};

// Fixed-width bitset over the link indices of one topology.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(int link_count)
      : words_(static_cast<std::size_t>((link_count + 63) / 64), 0) {}

  void Insert(int link_index) {
    words_[static_cast<std::size_t>(link_index) / 64] |=
        std::uint64_t{1} << (link_index % 64);
  }
  bool Contains(int link_index) const {
    return (words_[static_cast<std::size_t>(link_index) / 64] >>
            (link_index % 64)) & 1U;
  }
  bool Intersects(const LinkSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const LinkSet&, const LinkSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

class Topology {
 public:
  // Validates: node_count >= 2, endpoints in [1, node_count], no self-loops,
  // no duplicate directed links, strongly connected. Throws eon::Error
  // (kValidation) otherwise.
  Topology(std::string name, int node_count, std::vector<Link> links);

  const std::string& name() const { return name_; }
  int node_count() const { return node_count_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  // Sorted ascending by (from, to).
  std::span<const Link> links() const { return links_; }
  const Link& link(int index) const { return links_[index]; }

  bool HasNode(NodeId v) const { return v >= 1 && v <= node_count_; }
  // Index into links(), or -1 if the directed link is absent.
  int LinkIndex(NodeId from, NodeId to) const;
  bool HasLink(NodeId from, NodeId to) const {
    return LinkIndex(from, to) >= 0;
  }
  // Out-neighbors of v in ascending order.
  std::span<const NodeId> Successors(NodeId v) const { return out_[v]; }
  // In-neighbors of v in ascending order.
  std::span<const NodeId> Predecessors(NodeId v) const { return in_[v]; }

  // Same node count and same directed link set. Names are ignored.
  bool SameStructure(const Topology& other) const {
    return node_count_ == other.node_count_ && links_ == other.links_;
  }

 private:
  std::string name_;
  int node_count_;
  std::vector<Link> links_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

enum class BuiltinTopology { kRing12, kNsfnet14, kNjLata11 };

Topology MakeBuiltinTopology(BuiltinTopology which);

// Accepts "ring12", "nsfnet14", "njlata11" (case-insensitive) plus the
// aliases "ring", "nsfnet", "nsf", "njlata", "nj".
std::optional<BuiltinTopology> ParseBuiltinTopologyName(std::string_view name);
std::string_view BuiltinTopologyFileName(BuiltinTopology which);

// Text format:
//   nodes <N>
//   link <u> <v> [bidir|uni]     (default bidir)
// '#' starts a comment. Throws eon::Error (kParse) on malformed input and
// kValidation on invariant violations, including a repeated link.
Topology ParseTopology(std::string_view text, std::string name);
Topology LoadTopologyFile(const std::filesystem::path& path);
// Emits one `link` line per fiber, folding reciprocal pairs into `bidir`.
std::string FormatTopology(const Topology& topology);

// Bidirectional cycle 1-2-...-n-1, named "cycle<n>". Throws kInvalidParameter
// for n < 3.
Topology MakeCycleTopology(int n);

// Builtin name, "cycle<n>", or file path.
Topology ResolveTopology(std::string_view name_or_path);

class Path {
 public:
  // Validates simplicity, length >= 1 link, and that every hop is a link of
  // the topology.
  Path(const Topology& topology, std::vector<NodeId> nodes);

  std::span<const NodeId> nodes() const { return nodes_; }
  NodeId source() const { return nodes_.front(); }
  NodeId destination() const { return nodes_.back(); }
  int hop_count() const { return static_cast<int>(nodes_.size()) - 1; }
  std::vector<Link> links() const;
  const LinkSet& link_set() const { return link_set_; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  std::vector<NodeId> nodes_;
  LinkSet link_set_;
};

// True iff the two paths share at least one directed link. Opposite
// directions of one fiber are distinct links.
inline bool PathsIntersect(const Path& a, const Path& b) {
  return a.link_set().Intersects(b.link_set());
}

// Canonical order: hop count, then lexicographic node sequence.
bool CanonicalPathLess(std::span<const NodeId> a, std::span<const NodeId> b);

// The first min(k, #simple paths) loopless s->d paths in canonical order.
// Yen-style deviation search with a lexicographically-minimal BFS spur.
// Throws kNoPath if d is unreachable, kInvalidParameter on bad arguments.
std::vector<Path> KShortestPaths(const Topology& topology, NodeId source,
                                 NodeId destination, int k);

class CandidatePathTable {
 public:
  CandidatePathTable(int node_count, int k,
                     std::vector<std::vector<Path>> entries);

  int k() const { return k_; }
  int node_count() const { return node_count_; }
  int entry_count() const { return node_count_ * (node_count_ - 1); }

  std::span<const Path> Paths(NodeId source, NodeId destination) const {
    return entries_[Slot(source, destination)];
  }
  // rank is 1-based. A rank beyond the available paths resolves to the last
  // available candidate. Throws kIndex when rank is outside [1, k].
  const Path& PathAt(NodeId source, NodeId destination, int rank) const;

 private:
  std::size_t Slot(NodeId s, NodeId d) const {
    return static_cast<std::size_t>((s - 1) * node_count_ + (d - 1));
  }

  int node_count_;
  int k_;
  // Dense (s-1)*n + (d-1) layout; diagonal slots are empty.
  std::vector<std::vector<Path>> entries_;
};

CandidatePathTable AllCandidatePaths(const Topology& topology, int k);

}  // namespace eon

#endif  // EON_TOPOLOGY_H_
