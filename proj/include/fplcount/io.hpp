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

// JSON and SVG serialization. Every number is written as a decimal string;
// readers accept either strings or JSON numbers.

#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fplcount/exact.hpp"
#include "fplcount/fpl.hpp"
#include "fplcount/lattice.hpp"
#include "fplcount/partition.hpp"
#include "fplcount/reduction.hpp"
#include "fplcount/regions.hpp"

namespace fplcount {

using Json = nlohmann::ordered_json;

inline Json num(const ExactInt& v) { return to_decimal(v); }
inline Json num(const ExactRat& v) { return to_decimal(v); }
inline Json num(long long v) { return std::to_string(v); }
inline Json num(long v) { return std::to_string(v); }
inline Json num(int v) { return std::to_string(v); }
inline Json num(unsigned long v) { return std::to_string(v); }

inline ExactInt read_exact(const Json& j) {
  if (j.is_string()) return parse_exact_int(j.get<std::string>());
  if (j.is_number_integer()) return ExactInt(j.get<long>());
  throw DomainError("expected an integer");
}

inline int read_int(const Json& j) {
  const ExactInt v = read_exact(j);
  if (!v.fits_sint_p()) throw DomainError("integer out of range");
  return static_cast<int>(v.get_si());
}

inline int field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  return read_int(j.at(key));
}

// Partitions.

inline Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p.parts) out.push_back(num(part));
  return out;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array");
  std::vector<int> parts;
  for (const Json& x : j) parts.push_back(read_int(x));
  return Partition(std::move(parts));
}

// Accepts "[2,1]", "2,1" or "2 1".
inline Partition parse_partition(const std::string& text) {
  std::string t = text;
  for (char& c : t) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  std::istringstream in(t);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) parts.push_back(read_int(Json(tok)));
  return Partition(std::move(parts));
}

inline Json to_json(const Ssyt& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (int v : row) r.push_back(num(v));
    rows.push_back(std::move(r));
  }
  return Json{{"shape", to_json(t.shape)}, {"rows", rows}};
}

// Regions.

inline Json to_json(const RegionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HexagonSpec>) {
          return Json{{"type", "Hexagon"}, {"p", num(s.p)}, {"q", num(s.q)}, {"r", num(s.r)}};
        } else if constexpr (std::is_same_v<T, RLambdaSpec>) {
          return Json{{"type", "RLambda"}, {"lambda", to_json(s.lambda)}, {"r", num(s.r)}};
        } else if constexpr (std::is_same_v<T, FSpec> || std::is_same_v<T, EaredHexagonSpec>) {
          return Json{{"type", std::is_same_v<T, FSpec> ? "F" : "EaredHexagon"},
                      {"p", num(s.p)}, {"q", num(s.q)}, {"r", num(s.r)}, {"s", num(s.s)}};
        } else {
          const char* name = std::is_same_v<T, KSpec>   ? "K"
                             : std::is_same_v<T, LSpec> ? "L"
                             : std::is_same_v<T, MSpec> ? "M"
                                                        : "N";
          return Json{{"type", name}, {"p", num(s.p)}, {"q", num(s.q)}, {"r", num(s.r)}};
        }
      },
      spec);
}

inline RegionSpec region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw DomainError("region needs a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "Hexagon") return HexagonSpec{field(j, "p"), field(j, "q"), field(j, "r")};
  if (type == "RLambda") {
    if (!j.contains("lambda")) throw DomainError("missing field \"lambda\"");
    return RLambdaSpec{partition_from_json(j.at("lambda")), field(j, "r")};
  }
  if (type == "K") return KSpec{field(j, "p"), field(j, "q"), field(j, "r")};
  if (type == "L") return LSpec{field(j, "p"), field(j, "q"), field(j, "r")};
  if (type == "M") return MSpec{field(j, "p"), field(j, "q"), field(j, "r")};
  if (type == "N") return NSpec{field(j, "p"), field(j, "q"), field(j, "r")};
  if (type == "F") return FSpec{field(j, "p"), field(j, "q"), field(j, "r"), field(j, "s")};
  if (type == "EaredHexagon") {
    return EaredHexagonSpec{field(j, "p"), field(j, "q"), field(j, "r"), field(j, "s")};
  }
  throw DomainError("unknown region type \"" + type + "\"");
}

// Short form: a type letter followed by its parameters, e.g. {"H","2","2","2"}
// or {"R","[2,1]","1"}. A single token starting with '{' is read as JSON.
inline RegionSpec parse_region(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw DomainError("empty region description");
  if (tokens.size() == 1 && !tokens[0].empty() && tokens[0][0] == '{') {
    Json j;
    try {
      j = Json::parse(tokens[0]);
    } catch (const Json::exception& e) {
      throw DomainError(std::string("bad region JSON: ") + e.what());
    }
    return region_from_json(j);
  }
  const std::string& t = tokens[0];
  std::vector<int> v;
  auto ints = [&](size_t from, size_t count) {
    if (tokens.size() != from + count) {
      throw DomainError("region " + t + " takes " + std::to_string(count) + " parameters");
    }
    for (size_t i = from; i < tokens.size(); ++i) v.push_back(read_int(Json(tokens[i])));
  };
  if (t == "H" || t == "Hexagon") {
    ints(1, 3);
    return HexagonSpec{v[0], v[1], v[2]};
  }
  if (t == "R" || t == "RLambda") {
    if (tokens.size() != 3) throw DomainError("region R takes a partition and r");
    return RLambdaSpec{parse_partition(tokens[1]), read_int(Json(tokens[2]))};
  }
  if (t == "F" || t == "E" || t == "EaredHexagon") {
    ints(1, 4);
    if (t == "F") return FSpec{v[0], v[1], v[2], v[3]};
    return EaredHexagonSpec{v[0], v[1], v[2], v[3]};
  }
  ints(1, 3);
  if (t == "K") return KSpec{v[0], v[1], v[2]};
  if (t == "L") return LSpec{v[0], v[1], v[2]};
  if (t == "M") return MSpec{v[0], v[1], v[2]};
  if (t == "N") return NSpec{v[0], v[1], v[2]};
  throw DomainError("unknown region type \"" + t + "\"");
}

inline Json to_json(const Tri& t) {
  return Json::array({num(t.x), num(t.y), t.o == Orient::kUp ? "up" : "down"});
}

inline Json to_json(const Tiling& tiling) {
  Json out = Json::array();
  for (const Rhombus& r : tiling) out.push_back(Json{{"up", to_json(r.up)}, {"down", to_json(r.down)}});
  return out;
}

// Square grid objects.

inline Json edge_json(const Grid& g, int edge) {
  auto [a, b] = g.endpoints(edge);
  return Json::array({Json::array({num(a.row), num(a.col)}), Json::array({num(b.row), num(b.col)})});
}

inline Json to_json(const FplConfig& c) {
  const Grid g(c.n());
  Json edges = Json::array();
  for (int e : c.edges().edges()) edges.push_back(edge_json(g, e));
  return Json{{"n", num(c.n())}, {"parity", to_string(c.parity())}, {"edges", edges}};
}

inline Json to_json(const LinkPattern& m) {
  Json pairs = Json::array();
  for (auto [a, b] : m.pairs) pairs.push_back(Json::array({num(a), num(b)}));
  return Json{{"n", num(m.n)}, {"pairs", pairs}};
}

inline LinkPattern pattern_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const Json& p : j.at("pairs")) pairs.emplace_back(read_int(p.at(0)), read_int(p.at(1)));
  LinkPattern m = make_pattern(field(j, "n"), std::move(pairs));
  validate_pattern(m);
  return m;
}

inline Json to_json(const FixedEdgeSet& f) {
  const Grid g(f.n());
  Json out = Json::array();
  for (int e : f.edges.edges()) {
    out.push_back(Json{{"edge", edge_json(g, e)}, {"tag", to_string(f.tags.at(e))}});
  }
  return out;
}

inline Json to_json(const CaseReport& c) {
  return Json{{"case", num(c.index)},
              {"count", num(c.count)},
              {"matchings", num(c.matchings)},
              {"completions", num(c.completions)},
              {"tilings", num(c.tilings)},
              {"formula_value", num(c.formula)},
              {"match", c.match()}};
}

// SVG drawing of a tiling, one colour per rhombus direction.
inline std::string tiling_svg(const Tiling& tiling, double unit = 24.0) {
  const double h = std::sqrt(3.0) / 2.0;
  double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
  auto screen = [&](LatticePoint p) { return std::pair<double, double>{(p.x + 0.5 * p.y) * unit, -p.y * h * unit}; };
  std::ostringstream body;
  for (const Rhombus& r : tiling) {
    // Corners of the rhombus, counter-clockwise.
    const auto cu = tri_corners(r.up);
    const auto cd = tri_corners(r.down);
    std::vector<LatticePoint> pts(cu.begin(), cu.end());
    for (LatticePoint p : cd) {
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    // Order the four corners around their centre.
    double cx = 0, cy = 0;
    for (auto p : pts) {
      auto [x, y] = screen(p);
      cx += x / 4;
      cy += y / 4;
    }
    std::sort(pts.begin(), pts.end(), [&](LatticePoint a, LatticePoint b) {
      auto [ax, ay] = screen(a);
      auto [bx, by] = screen(b);
      return std::atan2(ay - cy, ax - cx) < std::atan2(by - cy, bx - cx);
    });
    const char* fill = r.down.y == r.up.y - 1 ? "#e8c170" : (r.down.x == r.up.x ? "#7fa7c9" : "#b6d7a8");
    body << "<polygon fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\" points=\"";
    for (auto p : pts) {
      auto [x, y] = screen(p);
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      body << x << "," << y << " ";
    }
    body << "\"/>\n";
  }
  if (tiling.empty()) xmin = xmax = ymin = ymax = 0;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - 2 << " " << ymin - 2 << " "
      << xmax - xmin + 4 << " " << ymax - ymin + 4 << "\">\n"
      << body.str() << "</svg>\n";
  return svg.str();
}

}  // namespace fplcount
