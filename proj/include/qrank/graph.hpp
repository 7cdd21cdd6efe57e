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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qrank {

/// Largest graph accepted by the dense representation.
inline constexpr std::size_t kMaxNodes = 16384;

/// Directed edge `src -> dst`, 0-based node ids.
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
};

/**
 * Binary adjacency matrix of a directed graph.
 *
 * Orientation: entry (i, j) is 1 iff node j links to node i, i.e. an edge
 * `src -> dst` sets entry (dst, src). Column j therefore lists the out-links
 * of node j and row i lists the in-links of node i. All ranking code depends
 * on this orientation; constructing a matrix from "row = source" data will
 * silently rank the transposed graph.
 *
 * Immutable after construction; storage is dense row-major.
 */
class AdjacencyMatrix {
 public:
  /// n x n all-zero matrix. Throws Error if n is 0 or exceeds kMaxNodes.
  explicit AdjacencyMatrix(std::size_t n);

  /// Rows in printed orientation (rows[i][j] = link j -> i). Every entry must
  /// be 0 or 1 and the matrix must be square.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static AdjacencyMatrix from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return n_; }
  bool link(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col] != 0;
  }
  std::size_t edge_count() const noexcept;
  std::vector<std::vector<int>> rows() const;

  AdjacencyMatrix transposed() const;
  /// Relabels node k as perm[k]: result(perm[i], perm[j]) = this(i, j).
  AdjacencyMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

enum class NormMode {
  kInf,               // P = A / max row sum
  kOne,               // P = A / max column sum
  kColumnStochastic,  // each column / its sum; empty columns become 1/n
};

std::string_view to_string(NormMode mode);
/// Accepts "inf", "one", "column". Throws Error otherwise.
NormMode parse_norm_mode(std::string_view name);

/// Dense nonnegative n x n matrix used by the Richardson updates.
class TransitionMatrix {
 public:
  /// Row-major entries. Throws Error unless entries.size() == n*n and every
  /// entry is finite and in [0, 1].
  TransitionMatrix(std::size_t n, std::vector<double> entries, NormMode mode,
                   double scale);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  NormMode mode() const noexcept { return mode_; }
  /// Scalar divisor for kInf / kOne; 1 for kColumnStochastic.
  double scale() const noexcept { return scale_; }
  double max_row_sum() const noexcept;

  /// y = P x. Each component is accumulated left to right over the row
  /// (column index ascending), so results are bitwise reproducible.
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
  NormMode mode_;
  double scale_;
};

/// Maximum row sum.
double matrix_inf_norm(const AdjacencyMatrix& a);
/// Maximum column sum.
double matrix_one_norm(const AdjacencyMatrix& a);

/// Throws Error("graph has no edges") when the selected norm is zero. The
/// scalar modes leave dangling columns untouched.
TransitionMatrix build_transition(const AdjacencyMatrix& a, NormMode mode);

/**
 * Edge-list text format:
 *
 *     # comment
 *     nodes 6      (optional, at most once)
 *     1 0          (edge from node 1 to node 0)
 *
 * Blank lines are ignored, CRLF is accepted. Without a header the node count
 * is 1 + the largest index seen. Duplicate edges are idempotent.
 */
AdjacencyMatrix parse_edge_list(std::istream& in);
AdjacencyMatrix parse_edge_list(std::string_view text);
/// Emits a `nodes` header followed by edges sorted by (src, dst).
std::string serialize_edge_list(const AdjacencyMatrix& a);

/// {"n": int, "rows": [[0/1, ...], ...]} in printed orientation.
nlohmann::json adjacency_to_json(const AdjacencyMatrix& a);
AdjacencyMatrix adjacency_from_json(const nlohmann::json& j);

/// Reads a `.json` file as the JSON adjacency format and anything else as an
/// edge list. Throws Error if the file cannot be opened.
AdjacencyMatrix load_graph(const std::filesystem::path& path);

}  // namespace qrank
