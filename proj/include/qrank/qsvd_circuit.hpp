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

// Rank-vector encoding circuit: one qubit per node, an H + RX encoding layer
// followed by a ladder of controlled-phase gates on adjacent qubit pairs.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qrank/statevector.hpp"

namespace qrank {

/// alpha[i] = 2*pi*x[i] for a unit-L2, nonnegative x.
struct EncodingAngles {
  std::vector<double> alpha;
};

/// beta[l-1] = 2*asin(2^-l) for layer l = 1, 2, ...
struct LadderAngles {
  std::vector<double> beta;
};

enum class LadderVariant {
  /// Layer l (1..n-1) puts CP(beta_l) on the first l adjacent pairs.
  kTriangular,
  /// Layer l (1..n) puts CP(beta_l) on every adjacent pair.
  kFull,
  /// Encoding layer only.
  kNone,
};

std::string_view to_string(LadderVariant variant);
/// Accepts "triangular", "full", "none".
LadderVariant parse_ladder_variant(std::string_view name);

/// Throws Error if x is empty, has a negative entry, or |x|_2 differs from 1
/// by more than 1e-9.
EncodingAngles encoding_angles(std::span<const double> x);

/// The n-1 triangular-ladder angles; empty for n < 2.
LadderAngles ladder_angles(std::size_t num_qubits);
/// 2*asin(2^-layer), layer >= 1.
double ladder_angle(std::size_t layer);

/**
 * Gate order: H on every qubit, then RX(alpha_q) on every qubit, then the
 * ladder layer by layer, pairs (j, j+1) in ascending j within a layer.
 * The triangular ladder gives 2n + n(n-1)/2 gates.
 */
Circuit build_qsvd_circuit(std::span<const double> x,
                           LadderVariant variant = LadderVariant::kTriangular);

}  // namespace qrank
