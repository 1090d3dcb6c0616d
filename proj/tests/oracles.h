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

// Brute-force reference implementations used only by the tests. Each one
// recomputes its quantity from definitions, sharing no code path with the
// library routine it checks.

#ifndef EON_TESTS_ORACLES_H_
#define EON_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "eon/conflict.h"
#include "eon/rsa.h"
#include "eon/topology.h"
#include "eon/traffic.h"

namespace eon::testing {

using NodeSeq = std::vector<NodeId>;

// Every simple s->d path by DFS, sorted by (hops, node sequence).
inline std::vector<NodeSeq> AllSimplePaths(const Topology& t, NodeId s,
                                           NodeId d) {
  std::vector<NodeSeq> out;
  NodeSeq current{s};
  std::vector<char> on(static_cast<std::size_t>(t.node_count()) + 1, 0);
  on[static_cast<std::size_t>(s)] = 1;
  std::function<void(NodeId)> dfs = [&](NodeId v) {
    if (v == d) {
      out.push_back(current);
      return;
    }
    for (const Link& l : t.links()) {
      if (l.from != v || on[static_cast<std::size_t>(l.to)]) continue;
      on[static_cast<std::size_t>(l.to)] = 1;
      current.push_back(l.to);
      dfs(l.to);
      current.pop_back();
      on[static_cast<std::size_t>(l.to)] = 0;
    }
  };
  dfs(s);
  std::sort(out.begin(), out.end(), [](const NodeSeq& a, const NodeSeq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline std::set<std::pair<NodeId, NodeId>> HopSet(const NodeSeq& p) {
  std::set<std::pair<NodeId, NodeId>> hops;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) hops.insert({p[i], p[i + 1]});
  return hops;
}

inline bool ShareHop(const NodeSeq& a, const NodeSeq& b) {
  const auto ha = HopSet(a);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (ha.count({b[i], b[i + 1]})) return true;
  }
  return false;
}

// theta(i,j) straight from the definition, using exhaustive path lists and
// explicit hop sets. A missing rank falls back to the last path.
inline double ThetaByEnumeration(const Topology& t,
                                 const TrafficDistribution& traffic, int i,
                                 int j) {
  const int n = t.node_count();
  std::vector<std::pair<double, std::pair<NodeSeq, NodeSeq>>> entries;
  for (NodeId s = 1; s <= n; ++s) {
    for (NodeId d = 1; d <= n; ++d) {
      if (s == d || traffic.Weight(s, d) <= 0.0) continue;
      const auto paths = AllSimplePaths(t, s, d);
      const auto pick = [&](int rank) {
        return paths[std::min<std::size_t>(static_cast<std::size_t>(rank - 1),
                                           paths.size() - 1)];
      };
      entries.push_back({traffic.Weight(s, d), {pick(i), pick(j)}});
    }
  }
  double theta = 0.0;
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      if (ShareHop(a.second.first, b.second.second)) theta += a.first * b.first;
    }
  }
  return theta;
}

inline bool Separated(int s1, int w1, int s2, int w2, int gb) {
  const int e1 = s1 + w1 - 1;
  const int e2 = s2 + w2 - 1;
  int closest = std::numeric_limits<int>::max();
  for (int a = s1; a <= e1; ++a) {
    for (int b = s2; b <= e2; ++b) closest = std::min(closest, std::abs(a - b));
  }
  return closest - 1 >= gb;
}

// Minimum MUFI by trying every start index for every vertex below the
// serial stacking bound. Exponential; meant for n <= 5.
inline int NaiveOptimalMufi(const ConflictGraph& g, int gb) {
  const int n = g.size();
  int max_w = 0;
  for (int v = 0; v < n; ++v) max_w = std::max(max_w, g.weight(v));
  const int cap = n * max_w + (n - 1) * gb;
  std::vector<int> start(static_cast<std::size_t>(n), 0);
  int best = std::numeric_limits<int>::max();
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      int mufi = 0;
      for (int u = 0; u < n; ++u) {
        mufi = std::max(mufi, start[static_cast<std::size_t>(u)] + g.weight(u) - 1);
      }
      best = std::min(best, mufi);
      return;
    }
    for (int s = 1; s + g.weight(v) - 1 <= cap; ++s) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (g.Adjacent(u, v)) {
          ok = Separated(start[static_cast<std::size_t>(u)], g.weight(u), s,
                         g.weight(v), gb);
        }
      }
      if (!ok) continue;
      start[static_cast<std::size_t>(v)] = s;
      rec(v + 1);
    }
  };
  rec(0);
  return best;
}

// True iff a proper k-coloring exists, by plain backtracking in index order.
inline bool KColorable(const ConflictGraph& g, int k) {
  std::vector<int> color(static_cast<std::size_t>(g.size()), 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == g.size()) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = !(g.Adjacent(u, v) && color[static_cast<std::size_t>(u)] == c);
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

inline int ChromaticByEnumeration(const ConflictGraph& g) {
  if (g.size() == 0) return 0;
  for (int k = 1;; ++k) {
    if (KColorable(g, k)) return k;
  }
}

inline double Quadratic(const ConflictMatrix& cm, const std::vector<double>& x) {
  double p = 0.0;
  for (int i = 0; i < cm.k(); ++i) {
    for (int j = 0; j < cm.k(); ++j) {
      p += cm(i, j) * x[static_cast<std::size_t>(i)] *
           x[static_cast<std::size_t>(j)];
    }
  }
  return p;
}

// Minimum of x^T Q x over a simplex grid of the given step. For k = 4 the
// first two coordinates are gridded and the last edge is minimized exactly.
inline double GridSearchGof(const ConflictMatrix& cm, double step) {
  const int k = cm.k();
  const int m = static_cast<int>(std::lround(1.0 / step));
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const std::vector<double>& x) {
    best = std::min(best, Quadratic(cm, x));
  };
  if (k == 1) return cm(0, 0);
  if (k == 2) {
    for (int a = 0; a <= m; ++a) consider({a * step, 1.0 - a * step});
    return best;
  }
  if (k == 3) {
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; a + b <= m; ++b) {
        consider({a * step, b * step, (m - a - b) * step});
      }
    }
    return best;
  }
  // k == 4: f(t) on the segment x3 = t, x4 = r - t is a 1-D quadratic.
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; a + b <= m; ++b) {
      const double x0 = a * step;
      const double x1 = b * step;
      const double r = std::max(0.0, 1.0 - x0 - x1);
      std::vector<double> x{x0, x1, 0.0, r};
      std::vector<double> candidates{0.0, r};
      // f(t) = A t^2 + B t + C with x3 = t, x4 = r - t.
      const double A = cm(2, 2) - 2.0 * cm(2, 3) + cm(3, 3);
      const double B = 2.0 * (x0 * (cm(0, 2) - cm(0, 3)) +
                              x1 * (cm(1, 2) - cm(1, 3)) +
                              r * (cm(2, 3) - cm(3, 3)));
      if (A > 0.0) candidates.push_back(std::clamp(-B / (2.0 * A), 0.0, r));
      for (double t : candidates) {
        x[2] = t;
        x[3] = r - t;
        consider(x);
      }
    }
  }
  return best;
}

inline ConflictGraph RandomGraph(int n, double p, int alpha, int beta,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(alpha, beta);
  std::bernoulli_distribution edge(p);
  std::vector<int> weights;
  for (int v = 0; v < n; ++v) weights.push_back(weight(rng));
  ConflictGraph g(std::move(weights));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.AddEdge(u, v);
    }
  }
  g.Finalize();
  return g;
}

inline ConflictMatrix RandomSymmetricMatrix(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double v = unit(rng);
      values[static_cast<std::size_t>(i * k + j)] = v;
      values[static_cast<std::size_t>(j * k + i)] = v;
    }
  }
  return ConflictMatrix(k, std::move(values));
}

}  // namespace eon::testing

#endif  // EON_TESTS_ORACLES_H_
