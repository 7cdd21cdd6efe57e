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

#include "qrank/qsvd_circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrank/error.hpp"
#include "test_util.hpp"

namespace qrank {
namespace {

// pi/3 correctly rounded to double (mpmath, 40 digits: 1.04719755119659774615...).
// Note std::numbers::pi / 3 rounds twice and lands one ulp below this.
constexpr double kPiOver3 = 1.0471975511965979;

std::vector<double> unit(std::vector<double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  for (double& x : v) x /= std::sqrt(s);
  return v;
}

std::vector<double> random_unit(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return unit(v);
}

TEST(EncodingAngles, Examples) {
  const auto a = encoding_angles(std::vector<double>{1.0, 0.0});
  EXPECT_DOUBLE_EQ(a.alpha[0], 2.0 * std::numbers::pi);
  EXPECT_EQ(a.alpha[1], 0.0);

  const double h = 1.0 / std::sqrt(2.0);
  const auto b = encoding_angles(std::vector<double>{h, h});
  EXPECT_NEAR(b.alpha[0], 4.442882938158366, 1e-12);  // pi * sqrt(2)
  EXPECT_NEAR(b.alpha[1], 4.442882938158366, 1e-12);

  const auto c = encoding_angles(std::vector<double>{0.6, 0.8});
  EXPECT_NEAR(c.alpha[0], 1.2 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(c.alpha[1], 1.6 * std::numbers::pi, 1e-12);
}

TEST(EncodingAngles, RejectsBadInput) {
  EXPECT_THROW(encoding_angles(std::vector<double>{1.0, 1.0}), Error);
  EXPECT_THROW(encoding_angles(std::vector<double>{-0.6, 0.8}), Error);
  EXPECT_THROW(encoding_angles(std::vector<double>{}), Error);
  EXPECT_NO_THROW(encoding_angles(std::vector<double>{0.6, 0.8 + 1e-10}));
}

TEST(LadderAngles, Values) {
  EXPECT_EQ(ladder_angle(1), kPiOver3);
  EXPECT_NEAR(ladder_angle(1), std::numbers::pi / 3.0, 2.3e-16);
  EXPECT_NEAR(ladder_angle(2), 0.505361, 1e-6);
  EXPECT_NEAR(ladder_angle(3), 0.250656, 1e-6);
  // Full precision, from math.asin.
  EXPECT_DOUBLE_EQ(ladder_angle(2), 0.5053605102841573);
  EXPECT_DOUBLE_EQ(ladder_angle(3), 0.2506556623361308);
  EXPECT_THROW(ladder_angle(0), Error);
}

TEST(LadderAngles, CountAndMonotone) {
  EXPECT_TRUE(ladder_angles(0).beta.empty());
  EXPECT_TRUE(ladder_angles(1).beta.empty());
  const auto l = ladder_angles(10);
  ASSERT_EQ(l.beta.size(), 9u);
  EXPECT_EQ(l.beta[0], kPiOver3);
  for (std::size_t i = 1; i < l.beta.size(); ++i) EXPECT_LT(l.beta[i], l.beta[i - 1]);
}

TEST(BuildQsvdCircuit, SingleQubit) {
  const Circuit c = build_qsvd_circuit(std::vector<double>{1.0});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[0], Gate::h(0));
  EXPECT_EQ(c.gates()[1].kind, GateKind::kRX);
  EXPECT_DOUBLE_EQ(c.gates()[1].param, 2.0 * std::numbers::pi);
}

TEST(BuildQsvdCircuit, TwoQubitsExactGateList) {
  const double h = 1.0 / std::sqrt(2.0);
  const Circuit c = build_qsvd_circuit(std::vector<double>{h, h});
  const double a = 2.0 * std::numbers::pi * h;
  Circuit want(2);
  want.add(Gate::h(0));
  want.add(Gate::h(1));
  want.add(Gate::rx(0, a));
  want.add(Gate::rx(1, a));
  want.add(Gate::cp(0, 1, kPiOver3));
  EXPECT_EQ(c, want);
}

TEST(BuildQsvdCircuit, SixQubitsHas27Gates) {
  EXPECT_EQ(build_qsvd_circuit(std::vector<double>(6, 1.0 / std::sqrt(6.0))).size(), 27u);
}

TEST(BuildQsvdCircuit, GateCountFormulaAndLadderShape) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 10; ++n) {
    const Circuit c = build_qsvd_circuit(random_unit(n, rng));
    EXPECT_EQ(c.size(), 2 * n + n * (n - 1) / 2) << n;

    std::vector<double> top_pair, bottom_pair;
    for (const Gate& g : c.gates()) {
      if (g.kind != GateKind::kCP) continue;
      EXPECT_EQ(g.targets[1], g.targets[0] + 1);
      if (g.targets[0] == 0) top_pair.push_back(g.param);
      if (n >= 2 && g.targets[0] == n - 2) bottom_pair.push_back(g.param);
    }
    if (n < 2) continue;
    ASSERT_EQ(top_pair.size(), n - 1);
    for (std::size_t l = 1; l < n; ++l) EXPECT_EQ(top_pair[l - 1], ladder_angle(l));
    ASSERT_EQ(bottom_pair.size(), 1u);
    EXPECT_EQ(bottom_pair[0], ladder_angle(n - 1));
  }
}

TEST(BuildQsvdCircuit, Variants) {
  const std::vector<double> x = unit({1, 2, 3, 4});
  const Circuit full = build_qsvd_circuit(x, LadderVariant::kFull);
  EXPECT_EQ(full.size(), 8u + 4 * 3);
  EXPECT_EQ(full.gates().back().param, ladder_angle(4));
  EXPECT_EQ(build_qsvd_circuit(x, LadderVariant::kNone).size(), 8u);
  EXPECT_EQ(build_qsvd_circuit(std::vector<double>{1.0}, LadderVariant::kFull).size(), 2u);
  EXPECT_EQ(parse_ladder_variant("full"), LadderVariant::kFull);
  EXPECT_THROW(parse_ladder_variant("diagonal"), Error);
}

TEST(BuildQsvdCircuit, StateMatchesKroneckerOracle) {
  const std::vector<double> x = unit({0.3, 0.1, 0.5, 0.2});
  const Circuit c = build_qsvd_circuit(x);
  std::vector<Complex> zero(16, 0.0);
  zero[0] = 1.0;
  const auto want = testing::oracle_run(c, zero);
  const StateVector got = apply_circuit(new_zero_state(4), c);
  EXPECT_LE(testing::max_abs_diff(got.amplitudes(), want), 1e-12);
}

TEST(BuildQsvdCircuit, ProbabilitiesDependOnlyOnEncodingLayer) {
  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto x = random_unit(n, rng);
    const auto with = exact_probabilities(apply_circuit(new_zero_state(n), build_qsvd_circuit(x)));
    const auto without = exact_probabilities(
        apply_circuit(new_zero_state(n), build_qsvd_circuit(x, LadderVariant::kNone)));
    for (std::size_t i = 0; i < with.size(); ++i) EXPECT_NEAR(with[i], without[i], 1e-12);
  }
}

TEST(BuildQsvdCircuit, PaddingWithZerosKeepsMarginals) {
  std::mt19937_64 rng(78);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto x = random_unit(n, rng);
    auto padded = x;
    padded.push_back(0.0);
    padded.push_back(0.0);
    const auto m = marginal_one_probs(apply_circuit(new_zero_state(n), build_qsvd_circuit(x)));
    const auto mp = marginal_one_probs(
        apply_circuit(new_zero_state(n + 2), build_qsvd_circuit(padded)));
    for (std::size_t q = 0; q < n; ++q) EXPECT_NEAR(m[q], mp[q], 1e-12);
  }
}

TEST(BuildQsvdCircuit, EncodingLeavesEveryMarginalAtOneHalf) {
  // RX commutes with X and H|0> is the +1 eigenstate of X, so each qubit of
  // the encoded register reads 1 with probability exactly 1/2.
  std::mt19937_64 rng(79);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto m = marginal_one_probs(
        apply_circuit(new_zero_state(n), build_qsvd_circuit(random_unit(n, rng))));
    for (double v : m) EXPECT_NEAR(v, 0.5, 1e-12);
  }
}

}  // namespace
}  // namespace qrank
