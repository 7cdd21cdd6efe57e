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

#include "qrank/pagerank.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "qrank/error.hpp"

namespace qrank {

RankVector::RankVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("rank vector must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw Error("rank vector component " + std::to_string(i) +
                  " is negative or not finite");
    }
  }
}

RankVector RankVector::uniform(std::size_t n, double value) {
  return RankVector(std::vector<double>(n, value));
}

double RankVector::sum() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

void SolverConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error("alpha must lie in [0, 1]");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error("epsilon must be positive");
  }
  if (max_iters < 1) throw Error("max_iters must be >= 1");
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double linf_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

namespace {

std::vector<double> damped_update(const TransitionMatrix& p,
                                  std::span<const double> x, double alpha,
                                  double teleport) {
  std::vector<double> y = p.multiply(x);
  for (double& v : y) v = alpha * v + teleport;
  return y;
}

void check_finite(std::span<const double> x, std::size_t iteration) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw Error("iteration " + std::to_string(iteration) +
                  " produced a non-finite value (diverged)");
    }
  }
}

}  // namespace

RankVector richardson_step(const TransitionMatrix& p, const RankVector& x,
                           double alpha) {
  const double n = static_cast<double>(p.size());
  return RankVector(damped_update(p, x.values(), alpha, (1.0 - alpha) / n));
}

SolveResult richardson_solve(const TransitionMatrix& p,
                             const SolverConfig& config,
                             const IterationObserver& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = p.size();
  const double teleport = (1.0 - config.alpha) / static_cast<double>(n);

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  SolverReport report;
  for (std::size_t k = 1; k <= config.max_iters; ++k) {
    std::vector<double> next = damped_update(p, x, config.alpha, teleport);
    check_finite(next, k);
    const double residual = l1_distance(next, x);
    x = std::move(next);
    report.residuals.push_back(residual);
    report.iterations = k;
    if (observer) observer(k, RankVector(x), residual);
    if (residual < config.epsilon) {
      report.converged = true;
      break;
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {RankVector(std::move(x)), std::move(report)};
}

SolveResult power_iteration_solve(const TransitionMatrix& p,
                                  const SolverConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = p.size();

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  SolverReport report;
  for (std::size_t k = 1; k <= config.max_iters; ++k) {
    double mass = 0.0;
    for (double v : x) mass += v;
    std::vector<double> next = damped_update(
        p, x, config.alpha, (1.0 - config.alpha) * mass / static_cast<double>(n));
    double total = 0.0;
    for (double v : next) total += v;
    if (!(total > 0.0)) {
      throw Error("iteration " + std::to_string(k) + " lost all rank mass");
    }
    for (double& v : next) v /= total;
    check_finite(next, k);
    const double residual = l1_distance(next, x);
    x = std::move(next);
    report.residuals.push_back(residual);
    report.iterations = k;
    if (residual < config.epsilon) {
      report.converged = true;
      break;
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {RankVector(std::move(x)), std::move(report)};
}

RankVector normalize_ranks(const RankVector& x) {
  const double total = x.sum();
  if (!(total > 0.0)) throw Error("cannot normalize an all-zero rank vector");
  std::vector<double> out(x.values().begin(), x.values().end());
  for (double& v : out) v /= total;
  return RankVector(std::move(out));
}

RankVector oracle_direct_solve(const TransitionMatrix& p, double alpha) {
  const std::size_t n = p.size();
  // Augmented system [I - alpha P | (1 - alpha)/n].
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = (i == j ? 1.0 : 0.0) - alpha * p.at(i, j);
    }
    m[i][n] = (1.0 - alpha) / static_cast<double>(n);
  }

  constexpr double kPivotTolerance = 1e-12;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < kPivotTolerance) {
      throw Error("near-singular system: I - alpha P has no usable pivot in column " +
                  std::to_string(col));
    }
    std::swap(m[col], m[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  for (double& v : x) {
    // Round-off can leave -0.0 or a few ulps below zero.
    if (v < 0.0 && v > -1e-15) v = 0.0;
    if (v < 0.0 || !std::isfinite(v)) {
      throw Error("fixed point has negative components (alpha P is not a contraction)");
    }
  }
  return RankVector(std::move(x));
}

}  // namespace qrank
