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

#include "fplcount/io.hpp"

namespace fplcount {
namespace {

TEST(Numbers, DecimalStrings) {
  EXPECT_EQ(num(ExactInt("123456789012345678901234567890")), Json("123456789012345678901234567890"));
  EXPECT_EQ(num(ExactRat(211, 5)), Json("211/5"));
  EXPECT_EQ(num(-4), Json("-4"));
  EXPECT_EQ(read_exact(Json("42")), 42);
  EXPECT_EQ(read_exact(Json(42)), 42);
  EXPECT_EQ(read_int(Json("7")), 7);
  EXPECT_THROW(read_int(Json("seven")), DomainError);
}

TEST(Partitions, Parsing) {
  const Partition want{{3, 2, 2}};
  EXPECT_EQ(parse_partition("[3,2,2]"), want);
  EXPECT_EQ(parse_partition("3,2,2"), want);
  EXPECT_EQ(parse_partition("3 2 2"), want);
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_THROW(parse_partition("2,3"), DomainError);
  EXPECT_THROW(parse_partition("2,x"), DomainError);
  EXPECT_EQ(to_json(want), Json::parse(R"(["3","2","2"])"));
  EXPECT_EQ(partition_from_json(to_json(want)), want);
}

TEST(Regions, JsonRoundTrip) {
  const std::vector<RegionSpec> specs{HexagonSpec{2, 3, 4}, RLambdaSpec{Partition{{2, 1}}, 2},
                                      KSpec{2, 1, 1},       LSpec{2, 2, 2},
                                      MSpec{1, 2, 3},       NSpec{3, 2, 1},
                                      FSpec{2, 1, 1, 1},    EaredHexagonSpec{2, 2, 1, 1}};
  for (const RegionSpec& s : specs) {
    const Json j = to_json(s);
    EXPECT_EQ(to_json(region_from_json(j)), j) << j.dump();
    EXPECT_EQ(to_json(parse_region({j.dump()})), j);
  }
}

TEST(Regions, ShortForms) {
  EXPECT_EQ(to_json(parse_region({"H", "2", "2", "2"})), to_json(RegionSpec{HexagonSpec{2, 2, 2}}));
  EXPECT_EQ(to_json(parse_region({"R", "[2,1]", "1"})),
            to_json(RegionSpec{RLambdaSpec{Partition{{2, 1}}, 1}}));
  EXPECT_EQ(to_json(parse_region({"E", "2", "1", "1", "1"})),
            to_json(RegionSpec{EaredHexagonSpec{2, 1, 1, 1}}));
  EXPECT_THROW(parse_region({}), DomainError);
  EXPECT_THROW(parse_region({"H", "2", "2"}), DomainError);
  EXPECT_THROW(parse_region({"Q", "1", "1", "1"}), DomainError);
  EXPECT_THROW(parse_region({"{not json"}), DomainError);
  EXPECT_THROW(parse_region({R"({"type":"Hexagon","p":"1"})"}), DomainError);
}

TEST(Patterns, JsonRoundTrip) {
  const LinkPattern m = make_pattern(2, {{2, 8}, {4, 6}});
  const Json j = to_json(m);
  EXPECT_EQ(j["n"], Json("2"));
  EXPECT_EQ(pattern_from_json(j), m);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"n":"2","pairs":[["1","5"],["3","7"]]})")), DomainError);
}

TEST(Svg, Hexagon) {
  const auto tilings = enumerate_tilings(build_special(HexagonSpec{1, 1, 1}));
  ASSERT_EQ(tilings.size(), 2u);
  const std::string svg = tiling_svg(tilings[0]);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(to_json(tilings[0]).size(), 3u);
}

}  // namespace
}  // namespace fplcount
