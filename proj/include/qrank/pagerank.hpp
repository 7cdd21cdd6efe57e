// Copyright 2026 The qrank Authors
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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qrank/graph.hpp"

namespace qrank {

/// Nonnegative, finite rank scores indexed by node.
class RankVector {
 public:
  /// Throws Error on an empty vector or a negative / non-finite value.
  explicit RankVector(std::vector<double> values);
  static RankVector uniform(std::size_t n, double value);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  double sum() const noexcept;

  friend bool operator==(const RankVector&, const RankVector&) = default;

 private:
  std::vector<double> values_;
};

struct SolverConfig {
  static constexpr double kDefaultAlpha = 0.85;
  static constexpr double kDefaultEpsilon = 1e-6;
  static constexpr std::size_t kDefaultMaxIters = 1000;

  double alpha = kDefaultAlpha;
  /// Stop once the L1 norm of x_{k+1} - x_k drops below this.
  double epsilon = kDefaultEpsilon;
  std::size_t max_iters = kDefaultMaxIters;

  /// Throws Error unless 0 <= alpha <= 1, epsilon > 0 and max_iters >= 1.
  void validate() const;
};

struct SolverReport {
  std::size_t iterations = 0;
  bool converged = false;
  /// L1 change of every iteration; size() == iterations.
  std::vector<double> residuals;
  double wall_time_seconds = 0.0;
};

struct SolveResult {
  RankVector ranks;
  SolverReport report;
};

/// Called after every iteration with (1-based iteration, new iterate, L1
/// residual).
using IterationObserver =
    std::function<void(std::size_t, const RankVector&, double)>;

/// alpha * (P x) + (1 - alpha) / n. Throws Error on dimension mismatch.
RankVector richardson_step(const TransitionMatrix& p, const RankVector& x,
                           double alpha);

/**
 * Damped Richardson iteration from the uniform start x0 = 1/n, stopping when
 * the L1 step falls below `config.epsilon` or after `config.max_iters`
 * iterations. The returned iterate is not renormalized; see normalize_ranks.
 *
 * Throws Error naming the iteration if an iterate stops being finite.
 */
SolveResult richardson_solve(const TransitionMatrix& p,
                             const SolverConfig& config,
                             const IterationObserver& observer = {});

/// Standard PageRank power method: x <- normalize(alpha P x + (1 - alpha)
/// sum(x) / n), renormalized to unit L1 mass every step. Not part of the
/// Richardson scheme; offered for comparison.
SolveResult power_iteration_solve(const TransitionMatrix& p,
                                  const SolverConfig& config);

/// x / sum(x). Throws Error if x has no positive component.
RankVector normalize_ranks(const RankVector& x);

/// Exact fixed point of the Richardson map: solves (I - alpha P) x =
/// (1 - alpha)/n by Gaussian elimination with partial pivoting. Throws Error
/// ("near-singular") when a pivot vanishes.
RankVector oracle_direct_solve(const TransitionMatrix& p, double alpha);

/// L1 distance. Sizes must match.
double l1_distance(std::span<const double> a, std::span<const double> b);
/// L-infinity distance. Sizes must match.
double linf_distance(std::span<const double> a, std::span<const double> b);

}  // namespace qrank
