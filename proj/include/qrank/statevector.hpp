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

// Dense statevector simulator for the H / RX / controlled-phase gate set.
//
// Bit ordering: qubit 0 is the MOST significant bit of a basis index, so on
// three qubits |q0 q1 q2> = |1 0 0> is index 4. Outcome strings in a
// MeasurementRecord print qubit 0 first.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qrank {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

struct Gate;

class StateVector {
 public:
  /// Throws Error unless amplitudes.size() is 2^n for 1 <= n <= kMaxQubits
  /// and the squared norm is 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  double norm_squared() const noexcept;

 private:
  friend StateVector new_zero_state(std::size_t n);
  friend StateVector apply_gate(StateVector state, const Gate& gate);
  StateVector(std::size_t n, std::vector<Complex> amplitudes)
      : num_qubits_(n), amplitudes_(std::move(amplitudes)) {}

  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

enum class GateKind { kH, kRX, kCP };

/**
 * One gate of the supported set:
 *
 *     H      = 1/sqrt(2) [[1, 1], [1, -1]]
 *     RX(t)  = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
 *     CP(b)  = diag(1, 1, 1, e^{i b})   on (control, target)
 *
 * CP is symmetric in its two qubits; the control/target labels only affect
 * serialization.
 */
struct Gate {
  GateKind kind = GateKind::kH;
  double param = 0.0;
  std::vector<std::size_t> targets;

  static Gate h(std::size_t qubit);
  static Gate rx(std::size_t qubit, double theta);
  static Gate cp(std::size_t control, std::size_t target, double beta);

  /// Row-major 2x2 (H, RX) or 4x4 (CP) matrix. For CP the row index is
  /// 2*control_bit + target_bit.
  std::vector<Complex> matrix() const;
  /// Throws Error if a target is out of range or CP targets coincide.
  void validate(std::size_t num_qubits) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string_view to_string(GateKind kind);

class Circuit {
 public:
  /// Throws Error unless 1 <= num_qubits <= kMaxQubits.
  explicit Circuit(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Validates against num_qubits before appending.
  void add(Gate gate);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

/// {"n": int, "gates": [{"kind": "H"|"RX"|"CP", "params": [...],
/// "targets": [...]}]}
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

struct MeasurementRecord {
  std::size_t num_qubits = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Outcome bitstring (qubit 0 first) -> count; only observed outcomes.
  std::map<std::string, std::uint64_t> counts;

  /// Number of shots in which each qubit read 1.
  std::vector<std::uint64_t> ones_per_qubit() const;

  friend bool operator==(const MeasurementRecord&,
                         const MeasurementRecord&) = default;
};

/// |0...0> on n qubits. Throws Error unless 1 <= n <= kMaxQubits.
StateVector new_zero_state(std::size_t n);

StateVector apply_gate(StateVector state, const Gate& gate);
/// Applies gates in order. Throws Error if the qubit counts differ.
StateVector apply_circuit(StateVector state, const Circuit& circuit);

/// |amplitude|^2 per basis index.
std::vector<double> exact_probabilities(const StateVector& state);
/// Probability that each qubit reads 1.
std::vector<double> marginal_one_probs(const StateVector& state);

/**
 * Draws `shots` Z-basis outcomes without touching the state.
 *
 * Generator: std::mt19937_64 seeded with `seed` (its 10000th output from the
 * default seed is fixed by the C++ standard). Each draw takes one 64-bit
 * output r, forms u = (r >> 11) * 2^-53 in [0, 1), and selects the first
 * basis index whose cumulative probability (summed in index order) exceeds
 * u. std::uniform_real_distribution is not used: its output sequence is
 * implementation-defined.
 *
 * Throws Error if shots == 0.
 */
MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t seed);

}  // namespace qrank
