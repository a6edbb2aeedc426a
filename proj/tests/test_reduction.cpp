// Copyright 2026 The fplcount Authors.
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

#include <gtest/gtest.h>

#include "fplcount/formulas.hpp"
#include "fplcount/isomorphism.hpp"
#include "fplcount/reduction.hpp"
#include "fplcount/regions.hpp"

namespace fplcount {
namespace {

TEST(Placement, CentresAt211) {
  const Placement a = placement_A(2, 1, 1);
  EXPECT_EQ(a.n, 5);
  EXPECT_EQ(a.center_p, 3);
  EXPECT_EQ(a.center_r, 15);
  EXPECT_EQ(a.center_q, 11);
  const Placement b = placement_B(2, 1, 1);
  EXPECT_EQ(b.n, 6);
  EXPECT_EQ(b.center_p, 4);
}

TEST(Placement, CentreFormulas) {
  for (int p = 2; p <= 7; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int r = 1; r <= 4; ++r) {
        const int s = p / 2;
        // Odd p shifts Q and R by two so the P and Q bundles do not share a label.
        const int shift = p % 2 == 0 ? 0 : 2;
        const Placement a = placement_A(p, q, r);
        const Grid g(a.n);
        EXPECT_EQ(a.center_p, g.normalize(r + s + 1));
        EXPECT_EQ(a.center_q, g.normalize(5 * s + 2 * q + r + 3 + shift));
        EXPECT_EQ(a.center_r, g.normalize(5 * s + 4 * q + 3 * r + 3 + shift));
        if (p % 2 == 0) {
          EXPECT_EQ(a.center_r, g.normalize(3 * a.n + q - s));
          EXPECT_EQ(a.center_q, g.normalize(2 * a.n + 1 + s - r));
        }
        const Placement b = placement_B(p, q, r);
        const Grid gb(b.n);
        EXPECT_EQ(b.center_p, gb.normalize(r + s + 2));
        EXPECT_EQ(b.center_q, gb.normalize(5 * s + 2 * q + r + 6 + shift));
        EXPECT_EQ(b.center_r, gb.normalize(5 * s + 4 * q + 3 * r + 6 + shift));
      }
}

TEST(Placement, ArcCountAndValidity) {
  for (int p = 2; p <= 6; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int r = 1; r <= 4; ++r) {
        const LinkPattern a = zuber_pattern_A(p, q, r);
        EXPECT_EQ(static_cast<int>(a.pairs.size()), p + q + r + 1);
        EXPECT_NO_THROW(validate_pattern(a));
        EXPECT_NO_THROW(validate_pattern(zuber_pattern_B(p, q, r)));
      }
  EXPECT_THROW(placement_A(1, 1, 1), DomainError);
  EXPECT_THROW(placement_B(2, 0, 1), DomainError);
}

TEST(BruteForce, PlacementCounts) {
  EXPECT_EQ(fpl_count(zuber_pattern_A(2, 1, 1)), 14);
  EXPECT_EQ(fpl_count(zuber_pattern_A(3, 1, 1)), 23);
  EXPECT_EQ(fpl_count(zuber_pattern_A(2, 2, 1)), 41);
  EXPECT_EQ(fpl_count(zuber_pattern_A(2, 1, 2)), 41);
  EXPECT_EQ(fpl_count(zuber_pattern_B(2, 1, 1)), 41);
  EXPECT_EQ(fpl_count(zuber_pattern_B(2, 2, 1)), 165);
  EXPECT_EQ(fpl_count(zuber_pattern_B(3, 1, 1)), 79);
}

TEST(FixedTriangle, AdjacentLinks) {
  const int n = 4;
  const Grid g(n);
  const FixedEdgeSet t = fixed_triangle(n, 1, 3, 1);
  std::vector<int> interior;
  for (int e : t.edges.edges()) {
    if (!g.is_external(e)) interior.push_back(e);
  }
  EXPECT_EQ(interior, std::vector<int>{g.vertical(1, 1)});
}

TEST(FixedTriangle, Case3Symmetric) {
  const int n = 5;
  const Grid g(n);
  for (int row = 0; row < n; ++row) {
    const FixedEdgeSet t = fixed_triangle(n, 4 * n - row, n + 1 + row, 3);
    for (int e : t.edges.edges()) {
      auto [a, b] = g.endpoints(e);
      int mirrored;
      if (g.is_horizontal(e)) mirrored = g.horizontal(a.row, n - std::max(a.col, b.col));
      else mirrored = g.vertical(std::max(a.row, b.row), n - 1 - a.col);
      EXPECT_TRUE(t.edges.contains(mirrored)) << row;
    }
  }
}

TEST(FixedTriangle, Preconditions) {
  EXPECT_THROW(fixed_triangle(5, 1, 4, 1), DomainError);
  EXPECT_THROW(fixed_triangle(5, 3, 9, 1), DomainError);
  EXPECT_THROW(fixed_triangle(5, 1, 3, 4), DomainError);
  EXPECT_THROW(fixed_triangle(5, 1, 3, 3), DomainError);
}

TEST(FixedTriangle, WithinConsensus) {
  for (const LinkPattern& m : {zuber_pattern_A(2, 1, 1), zuber_pattern_A(2, 2, 1), zuber_pattern_B(2, 1, 1)}) {
    const FixedEdgeSet cons = consensus_fixed(m);
    const auto runs = triangle_runs(m);
    EXPECT_EQ(runs.size(), 4u);
    for (const TriangleRun& run : runs) EXPECT_TRUE(fixed_triangle(m.n, run).subset_of(cons));
  }
}

TEST(Consensus, FullyNested) {
  const LinkPattern m = make_pattern(3, {{1, 11}, {3, 9}, {5, 7}});
  const auto configs = configurations_with(m);
  ASSERT_EQ(configs.size(), 1u);
  EXPECT_EQ(consensus_fixed(m).edges, configs[0].edges());
  EXPECT_TRUE(free_vertex_graph(consensus_fixed(m)).vertices.empty());
}

TEST(Consensus, EmptyInput) {
  EXPECT_THROW(consensus_of({}), DomainError);
}

TEST(Propagation, WithinConsensusAndClosed) {
  for (const LinkPattern& m : {zuber_pattern_A(2, 1, 1), zuber_pattern_A(3, 1, 1), zuber_pattern_B(2, 1, 1)}) {
    const auto runs = distinct_runs(m);
    const PropagationResult once = degier_propagate(boundary_of(m), runs);
    EXPECT_TRUE(once.fixed.subset_of(consensus_fixed(m)));
    PartialConfig again(m.n);
    again.occupied = once.fixed.edges;
    again.empty = once.empty;
    EXPECT_EQ(degier_propagate(again, runs).fixed.edges, once.fixed.edges);
    for (const TriangleRun& run : triangle_runs(m)) {
      if (run.which == 1) {
        EXPECT_TRUE(fixed_triangle(m.n, run).subset_of(once.fixed));
      }
    }
  }
}

TEST(Propagation, AuditSound) {
  const LinkPattern m = zuber_pattern_A(2, 1, 1);
  const PropagationResult res = degier_propagate(boundary_of(m), distinct_runs(m));
  const FiringAudit a = audit_firings(res.firings, configurations_with(m));
  EXPECT_TRUE(a.sound());
  EXPECT_EQ(a.configs, 14);
  EXPECT_GT(a.firings, 0);
}

TEST(Propagation, Unsatisfiable) {
  PartialConfig pc(2);
  const Grid g(2);
  for (int l = 1; l <= 8; ++l) pc.empty.set(g.link_edge(l));
  pc.empty.set(g.horizontal(0, 1));
  EXPECT_THROW(degier_propagate(pc, {}), DomainError);
}

TEST(FreeVertexGraph, NeedsFixedEdges) {
  EXPECT_THROW(free_vertex_graph(FixedEdgeSet(3)), DomainError);
}

TEST(Cases, AAt211) {
  const auto counts = case_counts_A(2, 1, 1);
  EXPECT_EQ(counts[0], 7);
  EXPECT_EQ(counts[1], 7);
  EXPECT_EQ(counts, case_formulas_A(2, 1, 1));
  for (const CaseReport& c : case_reports_A(2, 1, 1)) {
    EXPECT_TRUE(c.match());
    EXPECT_TRUE(c.embedded);
  }
}

TEST(Cases, ASizes) {
  EXPECT_EQ(case_counts_A(3, 1, 1), (std::array<ExactInt, 2>{14, 9}));
  EXPECT_EQ(case_counts_A(2, 2, 1), (std::array<ExactInt, 2>{25, 16}));
  EXPECT_EQ(case_counts_A(2, 1, 2), (std::array<ExactInt, 2>{16, 25}));
}

TEST(Cases, BAt211) {
  const auto counts = case_counts_B(2, 1, 1);
  EXPECT_EQ(counts, (std::array<ExactInt, 4>{4, 11, 14, 12}));
  EXPECT_EQ(counts, z2_case_values(2, 1, 1));
  for (const CaseReport& c : case_reports_B(2, 1, 1)) EXPECT_TRUE(c.match()) << c.index;
}

TEST(Cases, EaredHexagonIsomorphism) {
  const auto split = split_A(2, 1, 1);
  EXPECT_TRUE(isomorphic_to_region(free_vertex_graph(split[0].fixed), build_special(EaredHexagonSpec{2, 1, 1, 1})));
  EXPECT_TRUE(isomorphic_to_region(free_vertex_graph(split[1].fixed), build_special(EaredHexagonSpec{2, 1, 1, 1})));
  const auto s221 = split_A(2, 2, 1);
  EXPECT_TRUE(isomorphic_to_region(free_vertex_graph(s221[0].fixed), build_special(EaredHexagonSpec{2, 2, 1, 1})));
  EXPECT_TRUE(isomorphic_to_region(free_vertex_graph(s221[1].fixed), build_special(EaredHexagonSpec{2, 1, 2, 1})));
  EXPECT_FALSE(isomorphic_to_region(free_vertex_graph(s221[0].fixed), build_special(EaredHexagonSpec{2, 1, 2, 1})));
}

TEST(Matchings, Guard) {
  const auto split = split_A(2, 2, 1);
  EXPECT_THROW(count_perfect_matchings(free_vertex_graph(split[0].fixed), 3), GuardExceeded);
}

}  // namespace
}  // namespace fplcount
