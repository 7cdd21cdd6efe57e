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

#include "qrank/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrank/error.hpp"
#include "qrank/pagerank.hpp"
#include "qrank/vqpr.hpp"

namespace qrank::cli {

using nlohmann::json;

Method parse_method(std::string_view name) {
  if (name == "classical") return Method::kClassical;
  if (name == "quantum") return Method::kQuantum;
  if (name == "both") return Method::kBoth;
  throw Error("unknown method '" + std::string(name) +
              "' (expected classical, quantum or both)");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw Error("unknown format '" + std::string(name) +
              "' (expected table, json or csv)");
}

ClassicalSolver parse_classical_solver(std::string_view name) {
  if (name == "richardson") return ClassicalSolver::kRichardson;
  if (name == "power") return ClassicalSolver::kPower;
  throw Error("unknown classical solver '" + std::string(name) +
              "' (expected richardson or power)");
}

std::optional<std::uint64_t> parse_shots(std::string_view text) {
  if (text == "exact") return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw Error("--shots expects a positive integer or 'exact', got '" +
                std::string(text) + "'");
  }
  return value;
}

void RunManifest::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("--alpha must lie in [0, 1]");
  if (epsilon && !(*epsilon > 0.0)) throw Error("--epsilon must be positive");
  if (shots && *shots == 0) throw Error("--shots must be >= 1");
  if (max_iters < 1) throw Error("--max-iters must be >= 1");
}

std::optional<double> kendall_tau_b(std::span<const double> a,
                                    std::span<const double> b,
                                    double tie_tolerance) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  auto sign = [tie_tolerance](double d) {
    return std::abs(d) <= tie_tolerance ? 0 : (d > 0 ? 1 : -1);
  };
  long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0, pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ++pairs;
      const int sa = sign(a[i] - a[j]);
      const int sb = sign(b[i] - b[j]);
      if (sa == 0) ++ties_a;
      if (sb == 0) ++ties_b;
      if (sa != 0 && sb != 0) (sa == sb ? concordant : discordant) += 1;
    }
  }
  const double denom = std::sqrt(static_cast<double>(pairs - ties_a) *
                                 static_cast<double>(pairs - ties_b));
  if (denom == 0.0) return std::nullopt;
  return static_cast<double>(concordant - discordant) / denom;
}

namespace {

struct RunOutcome {
  std::string method;
  std::vector<double> ranks;  // normalized
  SolverReport report;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  json trace = json::array();
};

std::vector<double> to_vector(const RankVector& r) {
  return {r.values().begin(), r.values().end()};
}

RunOutcome run_classical(const TransitionMatrix& p, const RunManifest& m) {
  SolverConfig config;
  config.alpha = m.alpha;
  config.epsilon = m.epsilon.value_or(SolverConfig::kDefaultEpsilon);
  config.max_iters = m.max_iters;

  RunOutcome out;
  out.method = "classical";
  if (m.classical_solver == ClassicalSolver::kPower) {
    SolveResult r = power_iteration_solve(p, config);
    out.ranks = to_vector(normalize_ranks(r.ranks));
    out.report = std::move(r.report);
    return out;
  }
  json& trace = out.trace;
  SolveResult r = richardson_solve(
      p, config, [&trace](std::size_t k, const RankVector& x, double residual) {
        trace.push_back(
            {{"iteration", k}, {"x", to_vector(x)}, {"residual", residual}});
      });
  out.ranks = to_vector(normalize_ranks(r.ranks));
  out.report = std::move(r.report);
  return out;
}

VQPRConfig quantum_config(const RunManifest& m, std::size_t n) {
  VQPRConfig config;
  config.alpha = m.alpha;
  config.epsilon = m.epsilon.value_or(VQPRConfig::kDefaultEpsilon);
  config.shots = m.log_shots ? std::optional(log_shot_count(n)) : m.shots;
  config.seed = m.seed;
  config.max_iters = m.max_iters;
  config.ladder = m.ladder;
  return config;
}

RunOutcome run_quantum(const TransitionMatrix& p, const RunManifest& m) {
  const VQPRConfig config = quantum_config(m, p.size());
  VQPRResult r = vqpr_solve(p, config);
  RunOutcome out;
  out.method = "quantum";
  out.ranks = to_vector(normalize_ranks(r.ranks));
  out.report = std::move(r.report);
  out.seed = config.seed;
  out.shots = config.shots;
  for (const IterationTrace& t : r.trace) {
    out.trace.push_back({{"iteration", t.iteration},
                         {"x", t.x},
                         {"q", t.q},
                         {"residual", t.residual},
                         {"seed", t.seed}});
  }
  return out;
}

json run_to_json(const RunOutcome& r, NormMode norm) {
  json j = {{"method", r.method},
            {"norm", to_string(norm)},
            {"ranks", r.ranks},
            {"iterations", r.report.iterations},
            {"converged", r.report.converged},
            {"residuals", r.report.residuals},
            {"seed", r.seed ? json(*r.seed) : json(nullptr)}};
  if (r.method == "quantum") {
    j["shots"] = r.shots ? json(*r.shots) : json("exact");
  }
  return j;
}

// 1 + number of nodes scoring strictly higher (beyond round-off).
std::vector<std::size_t> places(const std::vector<double>& scores) {
  std::vector<std::size_t> out(scores.size(), 1);
  for (std::size_t i = 0; i < scores.size(); ++i)
    for (std::size_t j = 0; j < scores.size(); ++j)
      if (scores[j] - scores[i] > 1e-12) ++out[i];
  return out;
}

void print_header(std::ostream& out, const RunOutcome& r) {
  out << r.method << ": " << (r.report.converged ? "converged" : "NOT converged")
      << " after " << r.report.iterations << " iteration"
      << (r.report.iterations == 1 ? "" : "s");
  if (!r.report.residuals.empty()) {
    out << " (last residual " << std::scientific << std::setprecision(3)
        << r.report.residuals.back() << std::defaultfloat << ")";
  }
  if (r.method == "quantum") {
    out << ", shots " << (r.shots ? std::to_string(*r.shots) : "exact")
        << ", seed " << *r.seed;
  }
  out << '\n';
}

void print_table(std::ostream& out, const std::vector<RunOutcome>& runs,
                 NormMode norm, const std::optional<double>& tau) {
  out << "norm: " << to_string(norm) << '\n';
  for (const RunOutcome& r : runs) print_header(out, r);
  out << '\n' << std::setw(6) << "node";
  for (const RunOutcome& r : runs) {
    out << std::setw(12) << r.method << std::setw(7) << "place";
  }
  out << '\n';
  std::vector<std::vector<std::size_t>> run_places;
  for (const RunOutcome& r : runs) run_places.push_back(places(r.ranks));
  const std::size_t n = runs.front().ranks.size();
  out << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < n; ++i) {
    out << std::setw(6) << i;
    for (std::size_t k = 0; k < runs.size(); ++k) {
      out << std::setw(12) << runs[k].ranks[i] << std::setw(7)
          << run_places[k][i];
    }
    out << '\n';
  }
  out << std::defaultfloat;
  if (runs.size() == 2) {
    out << "\nkendall tau-b: ";
    if (tau) {
      out << std::fixed << std::setprecision(4) << *tau << std::defaultfloat;
    } else {
      out << "undefined";
    }
    out << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<RunOutcome>& runs) {
  out << "node";
  for (const RunOutcome& r : runs) out << ',' << r.method;
  out << '\n' << std::setprecision(17);
  for (std::size_t i = 0; i < runs.front().ranks.size(); ++i) {
    out << i;
    for (const RunOutcome& r : runs) out << ',' << r.ranks[i];
    out << '\n';
  }
  out << std::setprecision(6);
}

}  // namespace

int cmd_rank(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  std::vector<RunOutcome> runs;
  try {
    manifest.validate();
    const AdjacencyMatrix a = load_graph(manifest.input);
    const TransitionMatrix p = build_transition(a, manifest.norm);
    if (manifest.method != Method::kQuantum) {
      runs.push_back(run_classical(p, manifest));
    }
    if (manifest.method != Method::kClassical) {
      runs.push_back(run_quantum(p, manifest));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::optional<double> tau;
  if (runs.size() == 2) tau = kendall_tau_b(runs[0].ranks, runs[1].ranks);

  switch (manifest.format) {
    case OutputFormat::kJson: {
      json j;
      if (runs.size() == 1) {
        j = run_to_json(runs.front(), manifest.norm);
      } else {
        j = {{"runs", json::array()}};
        for (const RunOutcome& r : runs) {
          j["runs"].push_back(run_to_json(r, manifest.norm));
        }
        j["kendall_tau"] = tau ? json(*tau) : json(nullptr);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      print_csv(out, runs);
      break;
    case OutputFormat::kTable:
      print_table(out, runs, manifest.norm, tau);
      break;
  }

  if (manifest.trace) {
    json t = json::object();
    for (const RunOutcome& r : runs) t[r.method] = r.trace;
    std::ofstream f(*manifest.trace, std::ios::binary);
    if (!f) {
      err << "error: cannot write trace '" << manifest.trace->string() << "'\n";
      return kExitInputError;
    }
    f << t.dump(2) << '\n';
  }

  for (const RunOutcome& r : runs) {
    if (!r.report.converged) {
      err << r.method << " run did not converge within " << manifest.max_iters
          << " iterations\n";
      return kExitNotConverged;
    }
  }
  return kExitOk;
}

int cmd_dump_circuit(const RunManifest& manifest, std::size_t iteration,
                     std::ostream& out, std::ostream& err) {
  try {
    manifest.validate();
    const AdjacencyMatrix a = load_graph(manifest.input);
    const std::size_t n = a.size();
    RankVector x = RankVector::uniform(n, 1.0 / static_cast<double>(n));
    if (iteration > 0) {
      const TransitionMatrix p = build_transition(a, manifest.norm);
      const VQPRConfig base = quantum_config(manifest, n);
      for (std::size_t k = 1; k <= iteration; ++k) {
        VQPRConfig step = base;
        step.seed = iteration_seed(base.seed, k);
        x = vqpr_step(p, x, step);
      }
    }
    std::vector<double> unit(x.values().begin(), x.values().end());
    double norm2 = 0.0;
    for (double v : unit) norm2 += v * v;
    for (double& v : unit) v /= std::sqrt(norm2);

    const Circuit circuit = build_qsvd_circuit(unit, manifest.ladder);
    out << circuit_to_json(circuit).dump(2) << '\n';
    err << circuit.size() << " gates\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace qrank::cli
