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

#include "qrank/vqpr.hpp"

#include <chrono>
#include <cmath>

#include "qrank/error.hpp"
#include "qrank/statevector.hpp"

namespace qrank {

void VQPRConfig::validate() const {
  SolverConfig{alpha, epsilon, max_iters}.validate();
  if (shots && *shots == 0) throw Error("shots must be >= 1");
}

std::uint64_t log_shot_count(std::size_t num_nodes) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < num_nodes) ++k;
  return k == 0 ? 1 : k;
}

std::uint64_t iteration_seed(std::uint64_t base_seed, std::size_t iteration) {
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * iteration;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

QuantumEstimate quantum_rank_estimate(const RankVector& x,
                                      const VQPRConfig& config) {
  const std::size_t n = x.size();
  double norm2 = 0.0;
  for (double v : x.values()) norm2 += v * v;
  if (!(norm2 > 0.0)) throw Error("cannot encode an all-zero rank vector");
  const double inv = 1.0 / std::sqrt(norm2);
  std::vector<double> unit(x.values().begin(), x.values().end());
  for (double& v : unit) v *= inv;

  const Circuit circuit = build_qsvd_circuit(unit, config.ladder);
  const StateVector state = apply_circuit(new_zero_state(n), circuit);

  QuantumEstimate est;
  est.shots = config.shots;
  est.seed = config.seed;
  if (config.shots) {
    const MeasurementRecord record = sample(state, *config.shots, config.seed);
    const auto ones = record.ones_per_qubit();
    est.q.reserve(n);
    for (std::uint64_t c : ones) {
      est.q.push_back(static_cast<double>(c) / static_cast<double>(*config.shots));
    }
  } else {
    est.q = marginal_one_probs(state);
  }

  double total = 0.0;
  for (double v : est.q) total += v;
  if (total > 0.0) {
    for (double& v : est.q) v /= total;
  } else {
    est.q.assign(n, 1.0 / static_cast<double>(n));
  }
  return est;
}

RankVector vqpr_step(const TransitionMatrix& p, const RankVector& x,
                     const VQPRConfig& config) {
  if (x.size() != p.size()) {
    throw Error("dimension mismatch: matrix is " + std::to_string(p.size()) +
                "x" + std::to_string(p.size()) + ", vector has " +
                std::to_string(x.size()) + " entries");
  }
  const QuantumEstimate est = quantum_rank_estimate(x, config);
  return richardson_step(p, RankVector(est.q), config.alpha);
}

VQPRResult vqpr_solve(const TransitionMatrix& p, const VQPRConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = p.size();

  RankVector x = RankVector::uniform(n, 1.0 / static_cast<double>(n));
  SolverReport report;
  std::vector<IterationTrace> trace;
  for (std::size_t k = 1; k <= config.max_iters; ++k) {
    VQPRConfig step_config = config;
    step_config.seed = iteration_seed(config.seed, k);
    const QuantumEstimate est = quantum_rank_estimate(x, step_config);
    RankVector next = richardson_step(p, RankVector(est.q), config.alpha);
    const double residual = l1_distance(next.values(), x.values());

    trace.push_back({k, {next.values().begin(), next.values().end()}, est.q,
                     residual, step_config.seed});
    report.residuals.push_back(residual);
    report.iterations = k;
    x = std::move(next);
    if (residual < config.epsilon) {
      report.converged = true;
      break;
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(x), std::move(report), std::move(trace)};
}

}  // namespace qrank
