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

#include "qrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "qrank/error.hpp"

namespace qrank {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n) : n_(n) {
  if (n == 0) throw Error("adjacency matrix needs at least one node");
  if (n > kMaxNodes) {
    throw Error("graph has " + std::to_string(n) + " nodes; limit is " +
                std::to_string(kMaxNodes));
  }
  entries_.assign(n * n, 0);
}

AdjacencyMatrix AdjacencyMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  AdjacencyMatrix a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error("adjacency row " + std::to_string(i) + " has " +
                  std::to_string(rows[i].size()) + " entries, expected " +
                  std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) {
        throw Error("adjacency entries must be 0 or 1");
      }
      a.entries_[i * a.n_ + j] = static_cast<std::uint8_t>(v);
    }
  }
  return a;
}

AdjacencyMatrix AdjacencyMatrix::from_edges(std::size_t n,
                                            std::span<const Edge> edges) {
  AdjacencyMatrix a(n);
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw Error("edge " + std::to_string(e.src) + " -> " +
                  std::to_string(e.dst) + " out of range for " +
                  std::to_string(n) + " nodes");
    }
    a.entries_[e.dst * n + e.src] = 1;
  }
  return a;
}

std::size_t AdjacencyMatrix::edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(entries_.begin(), entries_.end(), std::uint8_t{1}));
}

std::vector<std::vector<int>> AdjacencyMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = entries_[i * n_ + j];
  return out;
}

AdjacencyMatrix AdjacencyMatrix::transposed() const {
  AdjacencyMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      t.entries_[j * n_ + i] = entries_[i * n_ + j];
  return t;
}

AdjacencyMatrix AdjacencyMatrix::permuted(
    std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw Error("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (std::size_t p : perm) {
    if (p >= n_ || seen[p]) throw Error("not a permutation");
    seen[p] = true;
  }
  AdjacencyMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out.entries_[perm[i] * n_ + perm[j]] = entries_[i * n_ + j];
  return out;
}

std::string_view to_string(NormMode mode) {
  switch (mode) {
    case NormMode::kInf:
      return "inf";
    case NormMode::kOne:
      return "one";
    case NormMode::kColumnStochastic:
      return "column";
  }
  return "unknown";
}

NormMode parse_norm_mode(std::string_view name) {
  if (name == "inf") return NormMode::kInf;
  if (name == "one") return NormMode::kOne;
  if (name == "column") return NormMode::kColumnStochastic;
  throw Error("unknown norm mode '" + std::string(name) +
              "' (expected inf, one or column)");
}

TransitionMatrix::TransitionMatrix(std::size_t n, std::vector<double> entries,
                                   NormMode mode, double scale)
    : n_(n), entries_(std::move(entries)), mode_(mode), scale_(scale) {
  if (n == 0) throw Error("transition matrix needs at least one node");
  if (entries_.size() != n * n) {
    throw Error("transition matrix needs " + std::to_string(n * n) +
                " entries, got " + std::to_string(entries_.size()));
  }
  for (double v : entries_) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error("transition matrix entries must lie in [0, 1]");
    }
  }
}

double TransitionMatrix::max_row_sum() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += entries_[i * n_ + j];
    best = std::max(best, s);
  }
  return best;
}

std::vector<double> TransitionMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw Error("dimension mismatch: matrix is " + std::to_string(n_) +
                "x" + std::to_string(n_) + ", vector has " +
                std::to_string(x.size()) + " entries");
  }
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = entries_.data() + i * n_;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double matrix_inf_norm(const AdjacencyMatrix& a) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a.link(i, j) ? 1 : 0;
    best = std::max(best, s);
  }
  return static_cast<double>(best);
}

double matrix_one_norm(const AdjacencyMatrix& a) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.link(i, j) ? 1 : 0;
    best = std::max(best, s);
  }
  return static_cast<double>(best);
}

TransitionMatrix build_transition(const AdjacencyMatrix& a, NormMode mode) {
  const std::size_t n = a.size();
  std::vector<double> p(n * n, 0.0);

  if (mode == NormMode::kColumnStochastic) {
    if (a.edge_count() == 0) throw Error("graph has no edges");
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t out_degree = 0;
      for (std::size_t i = 0; i < n; ++i) out_degree += a.link(i, j) ? 1 : 0;
      for (std::size_t i = 0; i < n; ++i) {
        p[i * n + j] = out_degree == 0
                           ? 1.0 / static_cast<double>(n)
                           : (a.link(i, j) ? 1.0 / static_cast<double>(out_degree)
                                           : 0.0);
      }
    }
    return TransitionMatrix(n, std::move(p), mode, 1.0);
  }

  const double scale =
      mode == NormMode::kInf ? matrix_inf_norm(a) : matrix_one_norm(a);
  if (scale == 0.0) throw Error("graph has no edges");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.link(i, j)) p[i * n + j] = 1.0 / scale;
  return TransitionMatrix(n, std::move(p), mode, scale);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line_no, "negative node index '" + std::string(token) + "'");
  }
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a node index, got '" +
                                  std::string(token) + "'");
  }
  if (value >= kMaxNodes) {
    throw ParseError(line_no, "node index " + std::string(token) +
                                  " exceeds limit " + std::to_string(kMaxNodes));
  }
  return value;
}

}  // namespace

AdjacencyMatrix parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t header_line = 0;
  std::size_t max_index = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "nodes") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected 'nodes N'");
      }
      if (declared) throw ParseError(line_no, "duplicate 'nodes' header");
      declared = parse_index(tokens[1], line_no);
      if (*declared == 0) throw ParseError(line_no, "node count must be >= 1");
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'src dst', got '" +
                                    std::string(line) + "'");
    }
    const Edge e{parse_index(tokens[0], line_no),
                 parse_index(tokens[1], line_no)};
    max_index = std::max({max_index, e.src, e.dst});
    edges.push_back(e);
  }

  if (!declared && edges.empty()) throw ParseError(0, "empty input: no nodes");
  std::size_t n = edges.empty() ? 0 : max_index + 1;
  if (declared) {
    if (*declared < n) {
      throw ParseError(header_line, "'nodes " + std::to_string(*declared) +
                                        "' is smaller than max index + 1 (" +
                                        std::to_string(n) + ")");
    }
    n = *declared;
  }
  return AdjacencyMatrix::from_edges(n, edges);
}

AdjacencyMatrix parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const AdjacencyMatrix& a) {
  std::ostringstream out;
  out << "nodes " << a.size() << '\n';
  for (std::size_t src = 0; src < a.size(); ++src)
    for (std::size_t dst = 0; dst < a.size(); ++dst)
      if (a.link(dst, src)) out << src << ' ' << dst << '\n';
  return out.str();
}

nlohmann::json adjacency_to_json(const AdjacencyMatrix& a) {
  return {{"n", a.size()}, {"rows", a.rows()}};
}

AdjacencyMatrix adjacency_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
    throw Error("adjacency JSON needs fields 'n' and 'rows'");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw Error("adjacency JSON 'n' must be a positive integer");
  }
  const auto n = j["n"].get<std::size_t>();
  std::vector<std::vector<int>> rows;
  try {
    rows = j["rows"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("adjacency JSON 'rows': ") + e.what());
  }
  if (rows.size() != n) {
    throw Error("adjacency JSON has " + std::to_string(rows.size()) +
                " rows, 'n' says " + std::to_string(n));
  }
  return AdjacencyMatrix::from_rows(rows);
}

AdjacencyMatrix load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("'" + path.string() + "': " + e.what());
    }
    return adjacency_from_json(j);
  }
  return parse_edge_list(in);
}

}  // namespace qrank
