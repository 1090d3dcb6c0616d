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

#include "eon/gof.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "eon/error.h"

namespace eon {
namespace {

constexpr double kKktResidual = 1e-10;
constexpr double kFeasibilitySlack = 1e-12;
constexpr double kTieTolerance = 1e-12;

double Quadratic(const ConflictMatrix& cm, std::span<const double> x) {
  double p = 0.0;
  const int k = cm.k();
  for (int i = 0; i < k; ++i) {
    double row = 0.0;
    for (int j = 0; j < k; ++j) row += cm(i, j) * x[static_cast<std::size_t>(j)];
    p += x[static_cast<std::size_t>(i)] * row;
  }
  return p;
}

// Clamps the feasibility slack away and renormalizes onto the simplex.
std::vector<double> Renormalize(std::vector<double> x) {
  for (double& v : x) v = std::max(v, 0.0);
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  return x;
}

struct Candidate {
  std::vector<double> x;
  double value;
  Certificate certificate;
};

// Smaller value wins; within kTieTolerance the lexicographically smaller
// vector wins.
bool Better(const Candidate& a, const std::optional<Candidate>& best) {
  if (!best) return true;
  if (a.value < best->value - kTieTolerance) return true;
  if (a.value > best->value + kTieTolerance) return false;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), best->x.begin(),
                                      best->x.end());
}

GofSolution Finish(const ConflictMatrix& cm, Candidate best,
                   int singular_supports) {
  RoutingScheme scheme(Renormalize(std::move(best.x)));
  const double p = EvaluateGof(cm, scheme);
  return GofSolution{std::move(scheme), p, best.certificate, singular_supports};
}

// Euclidean projection onto the probability simplex.
std::vector<double> ProjectToSimplex(std::vector<double> y) {
  std::vector<double> sorted = y;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0.0) tau = t;
  }
  for (double& v : y) v = std::max(v - tau, 0.0);
  return y;
}

GofSolution MultiStartProjectedGradient(const ConflictMatrix& cm) {
  const int k = cm.k();
  double lipschitz = 0.0;
  for (double v : cm.values()) lipschitz += v * v;
  lipschitz = 2.0 * std::sqrt(lipschitz) + 1e-12;
  const double step = 1.0 / lipschitz;

  // Starts: every vertex, the barycenter, and every edge midpoint.
  std::vector<std::vector<double>> starts;
  for (int i = 0; i < k; ++i) {
    std::vector<double> x(static_cast<std::size_t>(k), 0.0);
    x[static_cast<std::size_t>(i)] = 1.0;
    starts.push_back(std::move(x));
  }
  starts.emplace_back(static_cast<std::size_t>(k), 1.0 / k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<double> x(static_cast<std::size_t>(k), 0.0);
      x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(j)] = 0.5;
      starts.push_back(std::move(x));
    }
  }

  std::optional<Candidate> best;
  for (auto x : starts) {
    for (int iter = 0; iter < 20000; ++iter) {
      std::vector<double> y = x;
      for (int i = 0; i < k; ++i) {
        double gradient = 0.0;
        for (int j = 0; j < k; ++j) {
          gradient += 2.0 * cm(i, j) * x[static_cast<std::size_t>(j)];
        }
        y[static_cast<std::size_t>(i)] -= step * gradient;
      }
      y = ProjectToSimplex(std::move(y));
      double moved = 0.0;
      for (int i = 0; i < k; ++i) {
        moved = std::max(moved, std::abs(y[static_cast<std::size_t>(i)] -
                                         x[static_cast<std::size_t>(i)]));
      }
      x = std::move(y);
      if (moved < 1e-14) break;
    }
    Candidate c{x, Quadratic(cm, x), Certificate::kBestFound};
    if (Better(c, best)) best = std::move(c);
  }
  return Finish(cm, std::move(*best), 0);
}

}  // namespace

RoutingScheme::RoutingScheme(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw Error(ErrorCode::kValidation, "routing scheme needs k >= 1");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kValidation,
                  "routing probability outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw Error(ErrorCode::kValidation, "routing probabilities do not sum to 1");
  }
}

RoutingScheme RoutingScheme::Vertex(int k, int rank) {
  if (k < 1 || rank < 1 || rank > k) {
    throw Error(ErrorCode::kIndex, "vertex rank outside [1, k]");
  }
  std::vector<double> x(static_cast<std::size_t>(k), 0.0);
  x[static_cast<std::size_t>(rank - 1)] = 1.0;
  return RoutingScheme(std::move(x));
}

RoutingScheme RoutingScheme::Uniform(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be positive");
  return RoutingScheme(
      std::vector<double>(static_cast<std::size_t>(k), 1.0 / k));
}

RoutingScheme RoutingScheme::TwoPath(double p1) {
  return RoutingScheme({p1, 1.0 - p1});
}

double EvaluateGof(const ConflictMatrix& cm, const RoutingScheme& scheme) {
  if (scheme.k() != cm.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme has " + std::to_string(scheme.k()) +
                    " entries, conflict matrix is " + std::to_string(cm.k()) +
                    "x" + std::to_string(cm.k()));
  }
  return Quadratic(cm, scheme.probabilities());
}

std::string_view CertificateName(Certificate certificate) {
  switch (certificate) {
    case Certificate::kInteriorStationary:
      return "interior-stationary";
    case Certificate::kBoundary:
      return "boundary";
    case Certificate::kVertex:
      return "vertex";
    case Certificate::kBestFound:
      return "best-found";
  }
  return "unknown";
}

GofSolution MinimizeGofK2(const ConflictMatrix& cm) {
  if (cm.k() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "closed form needs a 2x2 conflict matrix");
  }
  const double t11 = cm(0, 0);
  const double t12 = cm(0, 1);
  const double t22 = cm(1, 1);
  // f(x) = a x^2 + b x + c with x = p1.
  const double a = t11 - 2.0 * t12 + t22;

  std::vector<Candidate> candidates;
  auto add = [&](double p1, Certificate certificate) {
    std::vector<double> x{p1, 1.0 - p1};
    const double value = Quadratic(cm, x);
    candidates.push_back({std::move(x), value, certificate});
  };
  add(0.0, Certificate::kVertex);
  if (a > 0.0) {
    const double p1 = std::clamp((t22 - t12) / a, 0.0, 1.0);
    if (p1 > 0.0 && p1 < 1.0) add(p1, Certificate::kInteriorStationary);
  }
  add(1.0, Certificate::kVertex);

  std::optional<Candidate> best;
  for (auto& c : candidates) {
    if (Better(c, best)) best = c;
  }
  return Finish(cm, std::move(*best), 0);
}

GofSolution MinimizeGof(const ConflictMatrix& cm) {
  const int k = cm.k();
  if (k > kMaxExactGofK) return MultiStartProjectedGradient(cm);

  std::optional<Candidate> best;
  int singular = 0;
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < k; ++i) {
      if (mask & (1U << i)) support.push_back(i);
    }
    const int m = static_cast<int>(support.size());

    // Stationarity on the face: 2 Q_S x - lambda 1 = 0, 1^T x = 1.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        kkt(r, c) = 2.0 * cm(support[static_cast<std::size_t>(r)],
                             support[static_cast<std::size_t>(c)]);
      }
      kkt(r, m) = -1.0;
      kkt(m, r) = 1.0;
    }
    rhs(m) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) {
      ++singular;
      continue;
    }
    const Eigen::VectorXd solution = lu.solve(rhs);
    if ((kkt * solution - rhs).lpNorm<Eigen::Infinity>() > kKktResidual) {
      ++singular;
      continue;
    }
    std::vector<double> x(static_cast<std::size_t>(k), 0.0);
    bool feasible = true;
    for (int r = 0; r < m; ++r) {
      if (solution(r) < -kFeasibilitySlack) {
        feasible = false;
        break;
      }
      x[static_cast<std::size_t>(support[static_cast<std::size_t>(r)])] =
          solution(r);
    }
    if (!feasible) continue;
    x = Renormalize(std::move(x));
    const Certificate certificate = m == 1   ? Certificate::kVertex
                                    : m == k ? Certificate::kInteriorStationary
                                             : Certificate::kBoundary;
    Candidate c{x, Quadratic(cm, x), certificate};
    if (Better(c, best)) best = std::move(c);
  }
  // Singleton supports are always invertible, so best is set.
  return Finish(cm, std::move(*best), singular);
}

}  // namespace eon
