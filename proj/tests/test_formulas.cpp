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
#include "fplcount/partition.hpp"

namespace fplcount {
namespace {

TEST(MacMahon, FrozenValues) {
  EXPECT_EQ(macmahon_h(1, 1, 1), 2);
  EXPECT_EQ(macmahon_h(2, 2, 2), 20);
  EXPECT_EQ(macmahon_h(3, 3, 3), 980);
  EXPECT_EQ(macmahon_h(4, 1, 1), 5);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) EXPECT_EQ(macmahon_h(p, q, 0), 1);
}

TEST(MacMahon, Symmetric) {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      for (int r = 0; r <= 6; ++r) {
        const ExactInt h = macmahon_h(p, q, r);
        EXPECT_EQ(h, macmahon_h(q, p, r));
        EXPECT_EQ(h, macmahon_h(r, q, p));
        EXPECT_EQ(h, macmahon_h(p, r, q));
      }
}

TEST(MacMahon, LargeInputsExact) {
  const ExactInt h = macmahon_h(64, 64, 64);
  EXPECT_GT(to_decimal(h).size(), 300u);
  EXPECT_EQ(h, macmahon_h(64, 64, 64));
}

TEST(AFactor, FrozenValues) {
  EXPECT_EQ(a_factor(2, 1, 1), make_rat(1, 120));
  EXPECT_EQ(a_factor(1, 1, 1), make_rat(1, 60));
}

TEST(AFactor, HexagonIdentity) {
  for (long p = 1; p <= 8; ++p)
    for (long q = 1; q <= 6; ++q)
      for (long r = 1; r <= 6; ++r) {
        const ExactRat v = a_factor(p, q, r) * ExactRat((p + q + 2) * (p + q + 3) * (p + r + 1) * (p + r + 2));
        EXPECT_EQ(v, ExactRat(macmahon_h(p + 2, q, r))) << p << q << r;
      }
}

TEST(KFormula, FrozenValues) {
  EXPECT_EQ(k_formula(1, 1, 1), 2);
  EXPECT_EQ(k_formula(3, 1, 1), 4);
  EXPECT_THROW(k_formula(0, 1, 1), DomainError);
}

TEST(KFormula, HookContent) {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q)
      for (int r = 1; r <= 5; ++r) {
        std::vector<int> parts(static_cast<size_t>(q - 1), p + 1);
        parts.push_back(p);
        EXPECT_EQ(k_formula(p, q, r), hook_content_count(Partition(parts), r + q)) << p << q << r;
      }
}

TEST(LmnFormulas, FrozenValues) {
  const LmnValues v = lmn_formulas(2, 1, 1);
  EXPECT_EQ(v.l, 0);
  EXPECT_EQ(v.m, 3);
  EXPECT_EQ(v.n, 3);
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) EXPECT_EQ(lmn_formulas(p, q, 1).l, 0);
}

TEST(FFormula, FrozenValues) {
  EXPECT_EQ(f_formula(2, 1, 1, 1), 7);
  EXPECT_EQ(f_formula(3, 1, 1, 1), 9);
  EXPECT_EQ(f_formula(3, 1, 1, 2), 14);
  EXPECT_EQ(f_formula(2, 1, 1, 0), k_formula(2, 1, 1));
}

TEST(Z1, FrozenValues) {
  EXPECT_EQ(z1(2, 1, 1), 14);
  EXPECT_EQ(z1(3, 1, 1), 23);
  EXPECT_EQ(z1(2, 2, 1), 41);
  EXPECT_EQ(z1(2, 1, 2), 41);
}

TEST(Z1, SymmetricInQR) {
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= 6; ++q)
      for (int r = 1; r <= 6; ++r) EXPECT_EQ(z1(p, q, r), z1(p, r, q));
}

TEST(Z1, SplitsIntoTwoF) {
  for (long p = 1; p <= 10; ++p) {
    if (p % 2 == 1 && p > 9) continue;
    for (long q = 1; q <= 6; ++q)
      for (long r = 1; r <= 6; ++r) {
        const ExactInt sum = p % 2 == 0 ? ExactInt(f_formula(p, q, r, p / 2) + f_formula(p, r, q, p / 2))
                                        : ExactInt(f_formula(p, q, r, (p - 1) / 2) + f_formula(p, r, q, (p + 1) / 2));
        EXPECT_EQ(z1(p, q, r), sum) << p << q << r;
      }
  }
}

TEST(Z2, ComponentsAt211) {
  const auto c = z2_components(2, 1, 1);
  EXPECT_EQ(c[0], 15);
  EXPECT_EQ(c[1], 8);
  EXPECT_EQ(c[2], 12);
  EXPECT_EQ(c[3], 0);
  EXPECT_EQ(c[4], 3);
  EXPECT_EQ(c[5], 3);
  EXPECT_EQ(z2_component_sum(2, 1, 1), 41);
  EXPECT_THROW(z2_components(3, 1, 1), DomainError);
}

TEST(Z2, CompactFormWith3qr) {
  for (long p = 2; p <= 10; p += 2)
    for (long q = 1; q <= 6; ++q)
      for (long r = 1; r <= 6; ++r) EXPECT_EQ(z2(p, q, r), z2_component_sum(p, q, r)) << p << q << r;
}

TEST(Z2, PrintedFactor4qrIsNotIntegral) {
  EXPECT_EQ(z2_compact_rational(2, 1, 1, 4), make_rat(211, 5));
  EXPECT_EQ(z2_compact_rational(2, 1, 1, 3), ExactRat(41));
}

TEST(Z2, OddPCompactForm) {
  EXPECT_EQ(z2(3, 1, 1), 79);
}

TEST(Z2, CaseValuesSum) {
  for (long p = 2; p <= 10; p += 2)
    for (long q = 1; q <= 5; ++q)
      for (long r = 1; r <= 5; ++r) {
        ExactInt sum = 0;
        for (const auto& v : z2_case_values(p, q, r)) sum += v;
        EXPECT_EQ(sum, z2_component_sum(p, q, r));
      }
  const auto v = z2_case_values(2, 1, 1);
  EXPECT_EQ(v[0], 4);
  EXPECT_EQ(v[1], 11);
  EXPECT_EQ(v[2], 14);
  EXPECT_EQ(v[3], 12);
}

TEST(Formulas, PositiveOnDomain) {
  for (long p = 1; p <= 20; p += 3)
    for (long q = 1; q <= 20; q += 4)
      for (long r = 1; r <= 20; r += 5) {
        EXPECT_GT(z1(p, q, r), 0);
        EXPECT_GT(z2(p, q, r), 0);
        EXPECT_GT(k_formula(p, q, r), 0);
        EXPECT_GE(lmn_formulas(p, q, r).l, 0);
      }
}

}  // namespace
}  // namespace fplcount
