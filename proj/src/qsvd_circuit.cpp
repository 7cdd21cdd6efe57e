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

#include <cmath>
#include <numbers>
#include <string>

#include "qrank/error.hpp"

namespace qrank {

std::string_view to_string(LadderVariant variant) {
  switch (variant) {
    case LadderVariant::kTriangular:
      return "triangular";
    case LadderVariant::kFull:
      return "full";
    case LadderVariant::kNone:
      return "none";
  }
  return "?";
}

LadderVariant parse_ladder_variant(std::string_view name) {
  if (name == "triangular") return LadderVariant::kTriangular;
  if (name == "full") return LadderVariant::kFull;
  if (name == "none") return LadderVariant::kNone;
  throw Error("unknown ladder variant '" + std::string(name) +
              "' (expected triangular, full or none)");
}

EncodingAngles encoding_angles(std::span<const double> x) {
  if (x.empty()) throw Error("cannot encode an empty vector");
  double norm2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || x[i] < 0.0) {
      throw Error("encoding input component " + std::to_string(i) +
                  " is negative or not finite");
    }
    norm2 += x[i] * x[i];
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw Error("encoding input must have unit L2 norm (got " +
                std::to_string(std::sqrt(norm2)) + ")");
  }
  EncodingAngles angles;
  angles.alpha.reserve(x.size());
  for (double v : x) angles.alpha.push_back(2.0 * std::numbers::pi * v);
  return angles;
}

double ladder_angle(std::size_t layer) {
  if (layer < 1) throw Error("ladder layers are numbered from 1");
  return 2.0 * std::asin(std::ldexp(1.0, -static_cast<int>(layer)));
}

LadderAngles ladder_angles(std::size_t num_qubits) {
  LadderAngles out;
  for (std::size_t l = 1; l < num_qubits; ++l) out.beta.push_back(ladder_angle(l));
  return out;
}

Circuit build_qsvd_circuit(std::span<const double> x, LadderVariant variant) {
  const EncodingAngles angles = encoding_angles(x);
  const std::size_t n = x.size();
  Circuit circuit(n);
  for (std::size_t q = 0; q < n; ++q) circuit.add(Gate::h(q));
  for (std::size_t q = 0; q < n; ++q) circuit.add(Gate::rx(q, angles.alpha[q]));

  switch (variant) {
    case LadderVariant::kTriangular:
      for (std::size_t l = 1; l < n; ++l) {
        const double beta = ladder_angle(l);
        for (std::size_t j = 0; j < l; ++j) circuit.add(Gate::cp(j, j + 1, beta));
      }
      break;
    case LadderVariant::kFull:
      if (n < 2) break;
      for (std::size_t l = 1; l <= n; ++l) {
        const double beta = ladder_angle(l);
        for (std::size_t j = 0; j + 1 < n; ++j) circuit.add(Gate::cp(j, j + 1, beta));
      }
      break;
    case LadderVariant::kNone:
      break;
  }
  return circuit;
}

}  // namespace qrank
