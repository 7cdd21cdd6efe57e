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

// Variational quantum PageRank: the damped Richardson update with P applied
// to a measurement-derived vector instead of the current iterate.
//
// Each step L2-normalizes the iterate x, encodes it with build_qsvd_circuit,
// and reads back q_j = P(qubit j = 1) (exact) or the fraction of shots with
// bit j set (sampled), renormalized so q sums to 1. The next iterate is
// alpha * P q + (1 - alpha) / n.
//
// Note on the H + RX encoding: |+> is an eigenstate of X, so RX(a) H |0> only
// picks up a global phase and every marginal is exactly 1/2. Combined with
// the diagonal ladder, the exact estimate is uniform for every input; this
// is asserted in the tests rather than hidden.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qrank/graph.hpp"
#include "qrank/pagerank.hpp"
#include "qrank/qsvd_circuit.hpp"

namespace qrank {

struct QuantumEstimate {
  /// Nonnegative, sums to 1.
  std::vector<double> q;
  /// Shot count, or nullopt for exact marginals.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};

struct VQPRConfig {
  static constexpr double kDefaultEpsilon = 1e-3;
  static constexpr std::uint64_t kDefaultShots = 4096;
  static constexpr std::uint64_t kDefaultSeed = 1;

  double alpha = SolverConfig::kDefaultAlpha;
  double epsilon = kDefaultEpsilon;
  /// nullopt selects exact marginals.
  std::optional<std::uint64_t> shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_iters = SolverConfig::kDefaultMaxIters;
  LadderVariant ladder = LadderVariant::kTriangular;

  void validate() const;
};

struct IterationTrace {
  std::size_t iteration = 0;  // 1-based
  std::vector<double> x;      // iterate after the step
  std::vector<double> q;      // estimate the step used
  double residual = 0.0;
  std::uint64_t seed = 0;
};

struct VQPRResult {
  RankVector ranks;
  SolverReport report;
  std::vector<IterationTrace> trace;
};

/// ceil(log2(n)), at least 1: the literal "measure log2(n) times" shot count.
std::uint64_t log_shot_count(std::size_t num_nodes);

/// Seed used by iteration k (1-based): the k-th output of a SplitMix64
/// stream started at `base_seed`.
std::uint64_t iteration_seed(std::uint64_t base_seed, std::size_t iteration);

/// Uses config.seed directly when sampling. Throws Error if x is all zero.
QuantumEstimate quantum_rank_estimate(const RankVector& x,
                                      const VQPRConfig& config);

RankVector vqpr_step(const TransitionMatrix& p, const RankVector& x,
                     const VQPRConfig& config);

/// From x0 = 1/n, iterates vqpr_step (iteration k sampled with
/// iteration_seed(config.seed, k)) until the L1 step is below
/// config.epsilon. Hitting max_iters is reported, not thrown.
VQPRResult vqpr_solve(const TransitionMatrix& p, const VQPRConfig& config);

}  // namespace qrank
