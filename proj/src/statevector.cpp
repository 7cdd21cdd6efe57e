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

#include "qrank/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qrank/error.hpp"

namespace qrank {

namespace {

void check_qubit_count(std::size_t n) {
  if (n < 1 || n > kMaxQubits) {
    throw Error("qubit count " + std::to_string(n) + " outside [1, " +
                std::to_string(kMaxQubits) + "]");
  }
}

// Mask of qubit q in a basis index (qubit 0 = most significant bit).
std::size_t qubit_mask(std::size_t num_qubits, std::size_t q) {
  return std::size_t{1} << (num_qubits - 1 - q);
}

void apply_single(std::vector<Complex>& amps, std::size_t num_qubits,
                  std::size_t q, const std::vector<Complex>& u) {
  const std::size_t mask = qubit_mask(num_qubits, q);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = u[0] * a0 + u[1] * a1;
    amps[i | mask] = u[2] * a0 + u[3] * a1;
  }
}

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  if ((std::size_t{1} << n) != amplitudes.size() || n == 0) {
    throw Error("amplitude count must be 2^n with n >= 1");
  }
  check_qubit_count(n);
  StateVector s(n, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw Error("state is not normalized");
  }
  return s;
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return s;
}

Gate Gate::h(std::size_t qubit) { return {GateKind::kH, 0.0, {qubit}}; }

Gate Gate::rx(std::size_t qubit, double theta) {
  return {GateKind::kRX, theta, {qubit}};
}

Gate Gate::cp(std::size_t control, std::size_t target, double beta) {
  return {GateKind::kCP, beta, {control, target}};
}

std::vector<Complex> Gate::matrix() const {
  switch (kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::kRX: {
      const double c = std::cos(param / 2.0);
      const double s = std::sin(param / 2.0);
      return {Complex(c, 0.0), Complex(0.0, -s), Complex(0.0, -s),
              Complex(c, 0.0)};
    }
    case GateKind::kCP: {
      std::vector<Complex> m(16, 0.0);
      m[0] = m[5] = m[10] = 1.0;
      m[15] = std::polar(1.0, param);
      return m;
    }
  }
  throw Error("unknown gate kind");
}

void Gate::validate(std::size_t num_qubits) const {
  const std::size_t arity = kind == GateKind::kCP ? 2 : 1;
  if (targets.size() != arity) {
    throw Error(std::string(to_string(kind)) + " gate needs " +
                std::to_string(arity) + " target(s)");
  }
  for (std::size_t t : targets) {
    if (t >= num_qubits) {
      throw Error("gate target " + std::to_string(t) + " out of range for " +
                  std::to_string(num_qubits) + " qubits");
    }
  }
  if (arity == 2 && targets[0] == targets[1]) {
    throw Error("CP control and target must differ");
  }
  if (!std::isfinite(param)) throw Error("gate parameter must be finite");
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kRX:
      return "RX";
    case GateKind::kCP:
      return "CP";
  }
  return "?";
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
}

void Circuit::add(Gate gate) {
  gate.validate(num_qubits_);
  gates_.push_back(std::move(gate));
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : circuit.gates()) {
    nlohmann::json params = nlohmann::json::array();
    if (g.kind != GateKind::kH) params.push_back(g.param);
    gates.push_back({{"kind", to_string(g.kind)},
                     {"params", params},
                     {"targets", g.targets}});
  }
  return {{"n", circuit.num_qubits()}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c(j.at("n").get<std::size_t>());
    for (const auto& g : j.at("gates")) {
      const auto kind = g.at("kind").get<std::string>();
      const auto params = g.at("params").get<std::vector<double>>();
      const auto targets = g.at("targets").get<std::vector<std::size_t>>();
      Gate gate;
      if (kind == "H") {
        gate.kind = GateKind::kH;
      } else if (kind == "RX") {
        gate.kind = GateKind::kRX;
      } else if (kind == "CP") {
        gate.kind = GateKind::kCP;
      } else {
        throw Error("unknown gate kind '" + kind + "'");
      }
      const std::size_t want_params = gate.kind == GateKind::kH ? 0 : 1;
      if (params.size() != want_params) {
        throw Error(kind + " gate expects " + std::to_string(want_params) +
                    " parameter(s)");
      }
      if (want_params == 1) gate.param = params[0];
      gate.targets = targets;
      c.add(std::move(gate));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed circuit JSON: ") + e.what());
  }
}

std::vector<std::uint64_t> MeasurementRecord::ones_per_qubit() const {
  std::vector<std::uint64_t> ones(num_qubits, 0);
  for (const auto& [bits, count] : counts) {
    for (std::size_t q = 0; q < num_qubits && q < bits.size(); ++q) {
      if (bits[q] == '1') ones[q] += count;
    }
  }
  return ones;
}

StateVector new_zero_state(std::size_t n) {
  check_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n, 0.0);
  amps[0] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  const std::size_t n = state.num_qubits();
  gate.validate(n);
  auto& amps = state.amplitudes_;
  if (gate.kind == GateKind::kCP) {
    const std::size_t both =
        qubit_mask(n, gate.targets[0]) | qubit_mask(n, gate.targets[1]);
    const Complex phase = std::polar(1.0, gate.param);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & both) == both) amps[i] *= phase;
    }
  } else {
    apply_single(amps, n, gate.targets[0], gate.matrix());
  }
  return state;
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw Error("circuit has " + std::to_string(circuit.num_qubits()) +
                " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) state = apply_gate(std::move(state), g);
  return state;
}

std::vector<double> exact_probabilities(const StateVector& state) {
  std::vector<double> probs;
  probs.reserve(state.amplitudes().size());
  for (const Complex& a : state.amplitudes()) probs.push_back(std::norm(a));
  return probs;
}

std::vector<double> marginal_one_probs(const StateVector& state) {
  const std::size_t n = state.num_qubits();
  const auto amps = state.amplitudes();
  std::vector<double> marginals(n, 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    for (std::size_t q = 0; q < n; ++q) {
      if (i & qubit_mask(n, q)) marginals[q] += p;
    }
  }
  return marginals;
}

MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t seed) {
  if (shots == 0) throw Error("shots must be >= 1");
  const std::vector<double> probs = exact_probabilities(state);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
    if (probs[i] > 0.0) last_nonzero = i;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(probs.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Accumulated round-off can leave cdf.back() slightly below 1.
    std::size_t idx = it == cdf.end() ? last_nonzero
                                      : static_cast<std::size_t>(it - cdf.begin());
    ++hits[idx];
  }

  MeasurementRecord record;
  record.num_qubits = state.num_qubits();
  record.shots = shots;
  record.seed = seed;
  const std::size_t n = state.num_qubits();
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == 0) continue;
    std::string bits(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
      if (i & qubit_mask(n, q)) bits[q] = '1';
    }
    record.counts.emplace(std::move(bits), hits[i]);
  }
  return record;
}

}  // namespace qrank
