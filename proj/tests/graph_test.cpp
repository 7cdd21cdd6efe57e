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

#include <gtest/gtest.h>

#include <random>

#include "qrank/error.hpp"
#include "test_util.hpp"

namespace qrank {
namespace {

using testing::reference6;

// Row i of the printed matrix lists the sources linking into node i, so the
// edge list is the transposed reading: entry (i, j) = 1 gives edge "j i".
constexpr const char* kReference6Edges =
    "# reference graph\n"
    "1 0\n2 0\n"
    "3 1\n4 1\n5 1\n"
    "4 2\n5 2\n"
    "5 3\n"
    "1 4\n5 4\n"
    "0 5\n1 5\n2 5\n3 5\n4 5\n";

AdjacencyMatrix random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (auto& row : rows)
    for (int& v : row) v = static_cast<int>(rng() % 3 == 0);
  return AdjacencyMatrix::from_rows(rows);
}

TEST(ParseEdgeList, TwoCycle) {
  const AdjacencyMatrix a = parse_edge_list("0 1\n1 0");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.link(1, 0));
  EXPECT_TRUE(a.link(0, 1));
  EXPECT_FALSE(a.link(0, 0));
  EXPECT_FALSE(a.link(1, 1));
}

TEST(ParseEdgeList, HeaderForcesSize) {
  const AdjacencyMatrix a = parse_edge_list("nodes 3\n0 1");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.edge_count(), 1u);
  EXPECT_TRUE(a.link(1, 0));
}

TEST(ParseEdgeList, ReferenceGraphMatchesPrintedMatrix) {
  const AdjacencyMatrix a = parse_edge_list(kReference6Edges);
  EXPECT_EQ(a, reference6());
  EXPECT_EQ(a.edge_count(), 15u);
}

TEST(ParseEdgeList, CrlfDuplicatesAndBlankLines) {
  const AdjacencyMatrix a = parse_edge_list("0 1\r\n\r\n  0   1\r\n# x\r\n");
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.edge_count(), 1u);
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("0 1\n# ok\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_edge_list("0 -1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("negative"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("nodes 2\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edge_list("nodes 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("nodes 2\nnodes 3\n"), ParseError);
}

TEST(ParseEdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n\n"), ParseError);
}

TEST(ParseEdgeList, HeaderWithoutEdges) {
  const AdjacencyMatrix a = parse_edge_list("nodes 1\n");
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.edge_count(), 0u);
}

TEST(Norms, ReferenceGraph) {
  EXPECT_EQ(matrix_inf_norm(reference6()), 5.0);
  EXPECT_EQ(matrix_one_norm(reference6()), 4.0);
}

TEST(Norms, ZeroAndIdentity) {
  EXPECT_EQ(matrix_inf_norm(AdjacencyMatrix(4)), 0.0);
  EXPECT_EQ(matrix_one_norm(AdjacencyMatrix(4)), 0.0);
  const auto eye = AdjacencyMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(matrix_inf_norm(eye), 1.0);
  EXPECT_EQ(matrix_one_norm(eye), 1.0);
}

TEST(BuildTransition, InfNormScalesByFive) {
  const AdjacencyMatrix a = reference6();
  const TransitionMatrix p = build_transition(a, NormMode::kInf);
  EXPECT_EQ(p.scale(), 5.0);
  EXPECT_EQ(p.mode(), NormMode::kInf);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_DOUBLE_EQ(p.at(i, j), a.link(i, j) ? 0.2 : 0.0);
  EXPECT_DOUBLE_EQ(p.max_row_sum(), 1.0);
}

TEST(BuildTransition, OneNormScalesByFour) {
  const AdjacencyMatrix a = reference6();
  const TransitionMatrix p = build_transition(a, NormMode::kOne);
  EXPECT_EQ(p.scale(), 4.0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_DOUBLE_EQ(p.at(i, j), a.link(i, j) ? 0.25 : 0.0);
}

TEST(BuildTransition, ColumnStochasticPatchesDanglingNodes) {
  // Node 2 has no out-links.
  const auto a = parse_edge_list("nodes 3\n0 1\n0 2\n1 0\n");
  const TransitionMatrix p = build_transition(a, NormMode::kColumnStochastic);
  for (std::size_t j = 0; j < 3; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < 3; ++i) col += p.at(i, j);
    EXPECT_NEAR(col, 1.0, 1e-15) << "column " << j;
  }
  EXPECT_DOUBLE_EQ(p.at(0, 2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.at(1, 0), 0.5);

  const TransitionMatrix scalar = build_transition(a, NormMode::kInf);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(scalar.at(i, 2), 0.0);
}

TEST(BuildTransition, EmptyGraphIsAnError) {
  for (NormMode mode : {NormMode::kInf, NormMode::kOne, NormMode::kColumnStochastic}) {
    try {
      build_transition(AdjacencyMatrix(3), mode);
      FAIL();
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "graph has no edges");
    }
  }
}

TEST(TransitionMatrix, RejectsOutOfRangeEntries) {
  EXPECT_THROW(TransitionMatrix(2, {0.0, 1.5, 0.0, 0.0}, NormMode::kInf, 1.0), Error);
  EXPECT_THROW(TransitionMatrix(2, {0.0, -0.1, 0.0, 0.0}, NormMode::kInf, 1.0), Error);
  EXPECT_THROW(TransitionMatrix(2, {0.0, 0.0, 0.0}, NormMode::kInf, 1.0), Error);
  const TransitionMatrix p(2, {0.0, 1.0, 0.5, 0.0}, NormMode::kInf, 1.0);
  EXPECT_THROW(p.multiply(std::vector<double>{1.0}), Error);
}

TEST(AdjacencyMatrix, RejectsNonBinaryAndRagged) {
  EXPECT_THROW(AdjacencyMatrix::from_rows({{0, 2}, {0, 0}}), Error);
  EXPECT_THROW(AdjacencyMatrix::from_rows({{0, 1}, {0}}), Error);
  EXPECT_THROW(AdjacencyMatrix::from_rows({}), Error);
  EXPECT_THROW(AdjacencyMatrix(kMaxNodes + 1), Error);
}

TEST(GraphJson, ReadsPrintedOrientation) {
  const auto j = nlohmann::json::parse(R"({"n": 2, "rows": [[0, 1], [0, 0]]})");
  const AdjacencyMatrix a = adjacency_from_json(j);
  EXPECT_TRUE(a.link(0, 1));  // edge 1 -> 0
  EXPECT_FALSE(a.link(1, 0));
  EXPECT_EQ(adjacency_from_json(adjacency_to_json(reference6())), reference6());
  EXPECT_THROW(adjacency_from_json(nlohmann::json::parse(R"({"n": 3, "rows": [[0]]})")), Error);
  EXPECT_THROW(adjacency_from_json(nlohmann::json::parse(R"({"rows": []})")), Error);
}

// Properties over random graphs.

TEST(GraphProperties, InfNormIsOneNormOfTranspose) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const AdjacencyMatrix a = random_graph(1 + rng() % 12, rng);
    EXPECT_EQ(matrix_inf_norm(a), matrix_one_norm(a.transposed()));
  }
}

TEST(GraphProperties, EdgeListRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const AdjacencyMatrix a = random_graph(1 + rng() % 12, rng);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(a)), a);
  }
}

TEST(GraphProperties, TransitionEntriesInUnitIntervalAndInfRowSumIsOne) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const AdjacencyMatrix a = random_graph(1 + rng() % 12, rng);
    if (a.edge_count() == 0) continue;
    for (NormMode mode : {NormMode::kInf, NormMode::kOne, NormMode::kColumnStochastic}) {
      const TransitionMatrix p = build_transition(a, mode);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          EXPECT_GE(p.at(i, j), 0.0);
          EXPECT_LE(p.at(i, j), 1.0);
        }
    }
    // k copies of fl(1/k) need not sum to exactly 1 (k = 10 gives 1 - 2^-53).
    EXPECT_NEAR(build_transition(a, NormMode::kInf).max_row_sum(), 1.0, 1e-15);
  }
}

}  // namespace
}  // namespace qrank
