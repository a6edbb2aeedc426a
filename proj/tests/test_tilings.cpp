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

#include <set>

#include "fplcount/formulas.hpp"
#include "fplcount/lattice.hpp"
#include "fplcount/partition.hpp"
#include "fplcount/regions.hpp"

namespace fplcount {
namespace {

TEST(Hexagon, Counts) {
  EXPECT_EQ(count_tilings(build_hexagon(1, 1, 1)), 2);
  EXPECT_EQ(count_tilings(build_hexagon(2, 2, 2)), 20);
  EXPECT_EQ(enumerate_tilings(build_hexagon(2, 2, 2)).size(), 20u);
  EXPECT_EQ(count_tilings(build_hexagon(3, 2, 0)), 1);
}

TEST(Hexagon, ParallelCountMatches) {
  const TriRegion h = build_hexagon(3, 3, 3);
  EXPECT_EQ(count_tilings(h, 4), count_tilings(h, 1));
}

TEST(Tilings, EnumerationIsDeterministic) {
  const TriRegion h = build_hexagon(2, 2, 1);
  EXPECT_EQ(enumerate_tilings(h), enumerate_tilings(h));
}

TEST(Tilings, EveryTilingCoversRegion) {
  const TriRegion region = build_R(Partition{3, 1}, 1);
  for (const Tiling& t : enumerate_tilings(region)) {
    std::set<Tri> seen;
    for (const Rhombus& r : t) {
      EXPECT_TRUE(seen.insert(r.up).second);
      EXPECT_TRUE(seen.insert(r.down).second);
    }
    EXPECT_EQ(static_cast<int>(seen.size()), region.size());
  }
}

TEST(Tilings, Guard) { EXPECT_THROW(enumerate_tilings(build_hexagon(3, 3, 3), 100), GuardExceeded); }

TEST(RLambda, RectangleIsHexagon) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int r = 0; r <= 3; ++r) {
        const Partition rect(std::vector<int>(static_cast<size_t>(q), p));
        EXPECT_TRUE(congruent(build_R(rect, r), build_hexagon(p, q, r))) << p << q << r;
      }
}

TEST(RLambda, BalancedTriangles) {
  for (const Partition& l : {Partition{2, 1}, Partition{4, 2, 2, 1}, Partition{7, 5, 2, 2, 1, 1}}) {
    for (int r = 0; r <= 3; ++r) {
      const TriRegion region = build_R(l, r);
      EXPECT_EQ(region.count(Orient::kUp), region.count(Orient::kDown));
    }
  }
  EXPECT_THROW(build_R(Partition{}, 1), DomainError);
}

TEST(RLambda, NotchedExampleSides) {
  // Profile (1,2,1,2,3,1,2,1), r = 2.
  const Runs expected{{0, 7}, {1, 7}, {2, 1}, {3, 2}, {4, 1}, {2, 1}, {3, 3}, {4, 2},
                      {2, 2}, {3, 1}, {4, 2}, {2, 2}, {3, 1}, {4, 2}, {5, 6}};
  EXPECT_EQ(build_R(Partition{7, 5, 2, 2, 1, 1}, 2).boundary_runs(), expected);
}

TEST(RLambda, CountsMatchHookContent) {
  for (const Partition& l : {Partition{1}, Partition{2, 1}, Partition{3, 3, 1}, Partition{3, 2, 2}}) {
    for (int r = 0; r <= 2; ++r) {
      EXPECT_EQ(count_tilings(build_R(l, r)), hook_content_count(l, r + l.length()));
    }
  }
}

TEST(RLambda, PathBijection21) {
  const Partition l{2, 1};
  std::set<Ssyt> tableaux;
  const auto tilings = enumerate_tilings(build_R(l, 1));
  ASSERT_EQ(tilings.size(), 8u);
  for (const Tiling& t : tilings) {
    const PathFamily fam = tiling_to_paths(t, l, 1);
    EXPECT_EQ(paths_to_tiling(fam), t);
    tableaux.insert(paths_to_ssyt(fam));
  }
  EXPECT_EQ(tableaux.size(), 8u);
}

TEST(RLambda, DegenerateStrip) {
  const auto tilings = enumerate_tilings(build_R(Partition{2, 2}, 0));
  ASSERT_EQ(tilings.size(), 1u);
  EXPECT_EQ(tiling_to_paths(tilings[0], Partition{2, 2}, 0).paths.size(), 2u);
}

TEST(RLambda, ForeignTilingRejected) {
  const auto t = enumerate_tilings(build_hexagon(2, 2, 2)).front();
  EXPECT_THROW(tiling_to_paths(t, Partition{2, 1}, 1), DomainError);
}

TEST(Special, BuildersValidate) {
  EXPECT_THROW(build_special(LSpec{1, 1, 1}), DomainError);
  EXPECT_THROW(build_special(KSpec{0, 1, 1}), DomainError);
  EXPECT_THROW(build_special(EaredHexagonSpec{2, 1, 1, 3}), DomainError);
  EXPECT_NO_THROW(build_special(NSpec{1, 1, 0}));
}

TEST(Special, FamilyCounts) {
  EXPECT_EQ(count_tilings(build_special(KSpec{1, 1, 1})), k_formula(1, 1, 1));
  EXPECT_EQ(count_tilings(build_special(MSpec{2, 1, 1})), 3);
  EXPECT_EQ(count_tilings(build_special(NSpec{2, 1, 1})), 3);
  EXPECT_EQ(count_tilings(build_special(FSpec{2, 1, 1, 1})), 7);
}

TEST(Special, FCounts) {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 2; ++s) {
          EXPECT_EQ(count_tilings(build_special(FSpec{p, q, r, s})), f_formula(p, q, r, s)) << p << q << r << s;
        }
}

TEST(Special, FConnectorSplit) {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 2; ++q)
      for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) {
          const TriRegion f = build_special(FSpec{p, q, r, s});
          const Connectors c = f_connectors(p, q, r);
          EXPECT_EQ(count_tilings_with(f, c.right), macmahon_h(p + 1, q, r) * macmahon_h(s - 1, 1, 1));
          EXPECT_EQ(count_tilings_with(f, c.left), k_formula(p, q, r));
        }
}

TEST(Special, EaredHexagonReducesToF) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 2; ++q)
      for (int r = 1; r <= 2; ++r)
        for (int s = 1; 2 * s <= p + 2; ++s) {
          const TriRegion e = build_special(EaredHexagonSpec{p, q, r, s});
          EXPECT_EQ(count_tilings(e), f_formula(p, q, r, s));
          EXPECT_TRUE(congruent(strip_forced(e), build_special(FSpec{p, q, r, s})));
        }
}

TEST(Congruent, DetectsDifference) {
  EXPECT_TRUE(congruent(build_hexagon(1, 2, 3), build_hexagon(3, 1, 2)));
  EXPECT_TRUE(congruent(build_hexagon(1, 2, 3), build_hexagon(2, 1, 3)));
  EXPECT_FALSE(congruent(build_hexagon(1, 2, 3), build_hexagon(1, 2, 2)));
}

TEST(Flips, UnitHexagon) {
  const auto all = enumerate_tilings(build_hexagon(1, 1, 1));
  ASSERT_EQ(all.size(), 2u);
  const auto nb = flips(all[0]);
  ASSERT_EQ(nb.size(), 1u);
  EXPECT_EQ(nb[0], all[1]);
}

TEST(Flips, ChangeThreeRhombi) {
  for (const Tiling& t : enumerate_tilings(build_hexagon(2, 2, 2))) {
    for (const Tiling& u : flips(t)) {
      std::set<Rhombus> a(t.begin(), t.end()), b(u.begin(), u.end());
      int removed = 0;
      for (const Rhombus& r : a) removed += !b.count(r);
      EXPECT_EQ(removed, 3);
    }
  }
}

TEST(Flips, Connected) {
  const FlipGraphReport h = flip_graph(build_hexagon(2, 2, 2));
  EXPECT_EQ(h.tilings, 20u);
  EXPECT_TRUE(h.connected());
  EXPECT_TRUE(flip_connected(build_special(KSpec{2, 2, 2})));
  EXPECT_TRUE(flip_connected(build_special(FSpec{2, 1, 2, 2})));
}

}  // namespace
}  // namespace fplcount
