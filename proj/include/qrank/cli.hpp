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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "qrank/graph.hpp"
#include "qrank/qsvd_circuit.hpp"

namespace qrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

enum class Method { kClassical, kQuantum, kBoth };
enum class OutputFormat { kTable, kJson, kCsv };
enum class ClassicalSolver { kRichardson, kPower };

Method parse_method(std::string_view name);
OutputFormat parse_format(std::string_view name);
ClassicalSolver parse_classical_solver(std::string_view name);
/// "exact" -> nullopt, otherwise a positive integer.
std::optional<std::uint64_t> parse_shots(std::string_view text);

struct RunManifest {
  std::filesystem::path input;
  NormMode norm = NormMode::kInf;
  Method method = Method::kClassical;
  double alpha = 0.85;
  /// Unset: 1e-6 for the classical run, 1e-3 for the quantum run.
  std::optional<double> epsilon;
  /// nullopt = exact marginals.
  std::optional<std::uint64_t> shots = 4096;
  /// Overrides `shots` with ceil(log2 n).
  bool log_shots = false;
  std::uint64_t seed = 1;
  std::size_t max_iters = 1000;
  OutputFormat format = OutputFormat::kTable;
  std::optional<std::filesystem::path> trace;
  LadderVariant ladder = LadderVariant::kTriangular;
  ClassicalSolver classical_solver = ClassicalSolver::kRichardson;

  /// Throws Error on out-of-range numeric fields.
  void validate() const;
};

/**
 * Loads the graph, runs the selected solver(s) and prints normalized ranks.
 * Returns kExitOk when every run converged, kExitNotConverged otherwise, and
 * kExitInputError (with a message on `err`) for unreadable input or bad
 * settings.
 */
int cmd_rank(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Prints the encoding circuit of the given VQPR iterate (0 = uniform start)
/// as JSON on `out` and its gate count on `err`.
int cmd_dump_circuit(const RunManifest& manifest, std::size_t iteration,
                     std::ostream& out, std::ostream& err);

/// Kendall tau-b between two score vectors. Scores within `tie_tolerance`
/// count as tied. nullopt when either vector is entirely tied.
std::optional<double> kendall_tau_b(std::span<const double> a,
                                    std::span<const double> b,
                                    double tie_tolerance = 1e-12);

}  // namespace qrank::cli
