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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qrank/cli.hpp"
#include "qrank/error.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string norm = "inf";
  std::string method = "classical";
  std::string shots = "4096";
  std::string format = "table";
  std::string ladder = "triangular";
  std::string solver = "richardson";
  std::string trace;
  double alpha = 0.85;
  double epsilon = 0.0;
  std::uint64_t seed = 1;
  std::size_t max_iters = 1000;
  std::size_t iteration = 0;
  bool log_shots = false;
};

void add_common(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("input", o.input, "Graph file (.json adjacency or edge list)")
      ->required();
  cmd->add_option("--norm", o.norm, "Transition scaling: inf, one, column")
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Damping factor")->capture_default_str();
  cmd->add_option("--epsilon", o.epsilon,
                  "L1 convergence threshold (default 1e-6 classical, 1e-3 quantum)");
  cmd->add_option("--shots", o.shots, "Shots per quantum iteration, or 'exact'")
      ->capture_default_str();
  cmd->add_flag("--log-shots", o.log_shots,
                "Use ceil(log2 n) shots per iteration");
  cmd->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  cmd->add_option("--max-iters", o.max_iters, "Iteration cap")
      ->capture_default_str();
  cmd->add_option("--ladder", o.ladder, "Ladder variant: triangular, full, none")
      ->capture_default_str();
}

qrank::cli::RunManifest to_manifest(const RawOptions& o) {
  qrank::cli::RunManifest m;
  m.input = o.input;
  m.norm = qrank::parse_norm_mode(o.norm);
  m.method = qrank::cli::parse_method(o.method);
  m.alpha = o.alpha;
  if (o.epsilon != 0.0) m.epsilon = o.epsilon;
  m.shots = qrank::cli::parse_shots(o.shots);
  m.log_shots = o.log_shots;
  m.seed = o.seed;
  m.max_iters = o.max_iters;
  m.format = qrank::cli::parse_format(o.format);
  if (!o.trace.empty()) m.trace = o.trace;
  m.ladder = qrank::parse_ladder_variant(o.ladder);
  m.classical_solver = qrank::cli::parse_classical_solver(o.solver);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrank: classical and variational quantum PageRank"};
  app.require_subcommand(1);
  RawOptions o;

  auto* rank = app.add_subcommand("rank", "Rank the nodes of a graph");
  add_common(rank, o);
  rank->add_option("--method", o.method, "classical, quantum or both")
      ->capture_default_str();
  rank->add_option("--format", o.format, "table, json or csv")
      ->capture_default_str();
  rank->add_option("--trace", o.trace, "Write per-iteration trace JSON here");
  rank->add_option("--classical-solver", o.solver, "richardson or power")
      ->capture_default_str();

  auto* compare = app.add_subcommand(
      "compare", "Run both solvers side by side (rank --method both)");
  add_common(compare, o);
  compare->add_option("--format", o.format, "table, json or csv")
      ->capture_default_str();
  compare->add_option("--trace", o.trace, "Write per-iteration trace JSON here");
  compare->add_option("--classical-solver", o.solver, "richardson or power")
      ->capture_default_str();

  auto* dump = app.add_subcommand("dump-circuit",
                                  "Print the encoding circuit as JSON");
  add_common(dump, o);
  dump->add_option("--iteration", o.iteration,
                   "Quantum iterate to encode (0 = uniform start)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qrank::cli::kExitInputError;
  }

  qrank::cli::RunManifest manifest;
  try {
    if (compare->parsed()) o.method = "both";
    manifest = to_manifest(o);
  } catch (const qrank::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qrank::cli::kExitInputError;
  }

  if (dump->parsed()) {
    return qrank::cli::cmd_dump_circuit(manifest, o.iteration, std::cout,
                                        std::cerr);
  }
  return qrank::cli::cmd_rank(manifest, std::cout, std::cerr);
}
