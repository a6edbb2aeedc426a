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

#include <algorithm>
#include <random>
#include <set>

#include "fplcount/partition.hpp"

namespace fplcount {
namespace {

Partition random_partition(std::mt19937& rng, int max_len, int max_part) {
  std::uniform_int_distribution<int> len(1, max_len), part(1, max_part);
  std::vector<int> parts(static_cast<size_t>(len(rng)));
  for (int& x : parts) x = part(rng);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

TEST(Partition, RejectsInvalid) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{7, 5, 2, 2, 1, 1}), (Partition{6, 4, 2, 2, 2, 1, 1}));
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Partition l = random_partition(rng, 8, 8);
    EXPECT_EQ(conjugate(conjugate(l)), l);
  }
}

TEST(ContentHook, Examples) {
  EXPECT_EQ(content_hook(Partition{1}, 1, 1).content, 0);
  EXPECT_EQ(content_hook(Partition{1}, 1, 1).hook, 1);
  EXPECT_EQ(content_hook(Partition{2, 1}, 1, 1).hook, 3);
  EXPECT_EQ(content_hook(Partition{2, 1}, 1, 2).content, 1);
  EXPECT_EQ(content_hook(Partition{2, 1}, 1, 2).hook, 1);
  EXPECT_THROW(content_hook(Partition{2, 1}, 2, 2), DomainError);
}

TEST(ContentHook, ConjugateSymmetry) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Partition l = random_partition(rng, 6, 6);
    const Partition c = conjugate(l);
    std::multiset<std::pair<int, int>> a, b;
    for (int i = 1; i <= l.length(); ++i)
      for (int j = 1; j <= l.part(i); ++j) {
        const auto x = content_hook(l, i, j);
        const auto y = content_hook(c, j, i);
        a.insert({x.hook, x.content});
        b.insert({y.hook, -y.content});
      }
    EXPECT_EQ(a, b);
  }
}

TEST(BorderProfile, NotchedExample) {
  EXPECT_EQ(border_profile(Partition{7, 5, 2, 2, 1, 1}).runs, (std::vector<int>{1, 2, 1, 2, 3, 1, 2, 1}));
}

TEST(BorderProfile, Shapes) {
  EXPECT_EQ(border_profile(Partition{4, 4, 4}).runs, (std::vector<int>{4, 3}));
  for (int p = 1; p <= 5; ++p)
    for (int q = 2; q <= 5; ++q) {
      std::vector<int> parts(static_cast<size_t>(q - 1), p + 1);
      parts.push_back(p);
      EXPECT_EQ(border_profile(Partition(parts)).runs, (std::vector<int>{p, 1, 1, q - 1}));
    }
  EXPECT_THROW(border_profile(Partition{}), DomainError);
}

TEST(BorderProfile, RoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Partition l = random_partition(rng, 9, 9);
    const BorderProfile bp = border_profile(l);
    EXPECT_EQ(reconstruct(bp), l);
    EXPECT_EQ(border_profile(reconstruct(bp)), bp);
  }
}

TEST(HookContent, Examples) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(hook_content_count(Partition{1}, n), n);
  EXPECT_EQ(hook_content_count(Partition{2, 1}, 3), 8);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(hook_content_count(Partition(std::vector<int>(static_cast<size_t>(n + 1), 1)), n), 0);
  }
}

TEST(Ssyt, EnumerationExamples) {
  EXPECT_EQ(enumerate_ssyt(Partition{1}, 2).size(), 2u);
  EXPECT_EQ(enumerate_ssyt(Partition{2, 1}, 3).size(), 8u);
  const auto forced = enumerate_ssyt(Partition{2, 2}, 2);
  ASSERT_EQ(forced.size(), 1u);
  EXPECT_EQ(forced[0].rows, (std::vector<std::vector<int>>{{1, 1}, {2, 2}}));
}

TEST(Ssyt, AllValidAndDistinct) {
  const auto all = enumerate_ssyt(Partition{3, 2}, 4);
  std::set<Ssyt> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  for (const auto& t : all) EXPECT_TRUE(t.valid(4));
  EXPECT_EQ(ExactInt(static_cast<long>(all.size())), hook_content_count(Partition{3, 2}, 4));
}

TEST(Ssyt, Guard) {
  EXPECT_THROW(enumerate_ssyt(Partition{4, 4}, 8, 100), GuardExceeded);
}

TEST(Lgv, Examples) {
  for (int r = 0; r <= 6; ++r) EXPECT_EQ(lgv_count(Partition{1}, r), r + 1);
  EXPECT_EQ(lgv_count(Partition{2, 1}, 1), 8);
}

TEST(Lgv, MatchesHookContentInBox) {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const Partition l = random_partition(rng, 4, 4);
    for (int r = 0; r <= 3; ++r) EXPECT_EQ(lgv_count(l, r), hook_content_count(l, r + l.length()));
  }
}

TEST(Paths, RoundTripOnSmallBox) {
  for (const Partition& l : {Partition{1}, Partition{2, 1}, Partition{3, 3, 3}, Partition{3, 1, 1}, Partition{2, 2}}) {
    for (int r = 0; r <= 2; ++r) {
      for (const Ssyt& t : enumerate_ssyt(l, r + l.length())) {
        const PathFamily fam = ssyt_to_paths(t, r);
        EXPECT_EQ(fam.paths.size(), static_cast<size_t>(l.first()));
        EXPECT_EQ(paths_to_ssyt(fam), t);
      }
    }
  }
}

TEST(Paths, SingleColumn) {
  const Partition col{1, 1, 1};
  const auto all = enumerate_ssyt(col, 3);
  ASSERT_EQ(all.size(), 1u);
  const PathFamily fam = ssyt_to_paths(all[0], 0);
  ASSERT_EQ(fam.paths.size(), 1u);
  EXPECT_EQ(paths_to_ssyt(fam), all[0]);
}

// A tableau of shape (7,5,2,2,1,1) with entries at most r + 6 = 8.
TEST(Paths, LargeShapeFixture) {
  const Partition shape{7, 5, 2, 2, 1, 1};
  const Ssyt t{shape, {{1, 1, 2, 3, 3, 5, 8}, {2, 3, 3, 4, 6}, {3, 4}, {5, 6}, {6}, {7}}};
  ASSERT_TRUE(t.valid(8));
  const PathFamily fam = ssyt_to_paths(t, 2);
  EXPECT_NO_THROW(validate_family(fam));
  EXPECT_EQ(fam.paths.size(), 7u);
  EXPECT_EQ(paths_to_ssyt(fam), t);
  EXPECT_EQ(paths_to_ssyt(fam).shape, shape);
}

TEST(Paths, EntryOutOfBounds) {
  const Ssyt t{Partition{1}, {{5}}};
  EXPECT_THROW(ssyt_to_paths(t, 1), DomainError);
}

}  // namespace
}  // namespace fplcount
