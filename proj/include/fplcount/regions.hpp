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

// Region builders: hexagons, notched hexagons R(lambda, r), the K/L/M/N
// families, the one-eared hexagon F and the two-eared hexagon.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fplcount/lattice.hpp"
#include "fplcount/partition.hpp"

namespace fplcount {

using Runs = std::vector<std::pair<int, int>>;

inline Runs hexagon_runs(int p, int q, int r) {
  return {{0, p}, {1, r}, {2, q}, {3, p}, {4, r}, {5, q}};
}

inline TriRegion build_hexagon(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("hexagon sides must be >= 0");
  return TriRegion::from_boundary({0, 0}, hexagon_runs(p, q, r));
}

// Base lambda_1, bottom-right side r + v_1 + ... + v_{k-1}, top-right v_k,
// then the top from right to left: h_k, notch v_{k-1}, h_{k-1}, ..., h_1,
// then top-left side r and bottom-left side lambda'_1.
inline Runs rlambda_runs(const Partition& lambda, int r) {
  if (lambda.empty()) throw DomainError("R(lambda, r) needs a non-empty lambda");
  if (r < 0) throw DomainError("R(lambda, r) needs r >= 0");
  const BorderProfile bp = border_profile(lambda);
  const int k = bp.k();
  int lower_v = 0;
  for (int i = 1; i < k; ++i) lower_v += bp.v(i);
  Runs runs{{0, lambda.first()}, {1, r + lower_v}, {2, bp.v(k)}, {3, bp.h(k)}};
  for (int i = k - 1; i >= 1; --i) {
    runs.emplace_back(4, bp.v(i));
    runs.emplace_back(2, bp.v(i));
    runs.emplace_back(3, bp.h(i));
  }
  runs.emplace_back(4, r);
  runs.emplace_back(5, lambda.length());
  return runs;
}

inline TriRegion build_R(const Partition& lambda, int r) {
  return TriRegion::from_boundary({0, 0}, rlambda_runs(lambda, r));
}

// Tilings of R(lambda, r) and families of non-intersecting paths. A path
// enters each rhombus through the midpoint of one horizontal side and leaves
// through the opposite one. Crossing the lattice segment (x,y)-(x+1,y) is the
// path point (x+1, x+y+1); a vertical rhombus is a south step and a tilted one
// an east step.
inline PathFamily tiling_to_paths(const Tiling& tiling, const Partition& lambda, int r) {
  const TriRegion region = build_R(lambda, r);
  std::map<Tri, Tri> partner;
  for (const Rhombus& rh : tiling) {
    if (!region.contains(rh.up) || !region.contains(rh.down)) {
      throw DomainError("tiling does not lie in R(lambda, r)");
    }
    partner[rh.up] = rh.down;
    partner[rh.down] = rh.up;
  }
  if (static_cast<int>(partner.size()) != region.size()) {
    throw DomainError("tiling does not cover R(lambda, r)");
  }
  const Partition conj = conjugate(lambda);
  PathFamily fam{lambda, r, {}};
  for (int i = 1; i <= lambda.first(); ++i) {
    const auto [sx, sy] = family_start(conj, i, r);
    LatticePath path{sx, sy, {}};
    int x = sx - 1;
    int y = sy - x - 1;
    while (y > 0) {
      const Tri down{x, y - 1, Orient::kDown};
      auto it = partner.find(down);
      if (it == partner.end()) throw DomainError("path leaves the region");
      const Tri up = it->second;
      if (up == Tri{x, y - 1, Orient::kUp}) {
        path.steps.push_back(Step::kSouth);
      } else if (up == Tri{x + 1, y - 1, Orient::kUp}) {
        path.steps.push_back(Step::kEast);
        ++x;
      } else {
        throw DomainError("path meets a horizontal rhombus");
      }
      --y;
    }
    fam.paths.push_back(std::move(path));
  }
  validate_family(fam);
  return fam;
}

inline Tiling paths_to_tiling(const PathFamily& fam) {
  validate_family(fam);
  const TriRegion region = build_R(fam.shape, fam.r);
  std::set<Tri> covered;
  Tiling out;
  auto place = [&](Tri up, Tri down) {
    if (!region.contains(up) || !region.contains(down) || covered.count(up) || covered.count(down)) {
      throw DomainError("paths do not induce a tiling");
    }
    covered.insert(up);
    covered.insert(down);
    out.push_back({up, down});
  };
  for (const LatticePath& path : fam.paths) {
    int x = path.start_x - 1;
    int y = path.start_y - x - 1;
    for (Step st : path.steps) {
      const Tri down{x, y - 1, Orient::kDown};
      if (st == Step::kSouth) {
        place({x, y - 1, Orient::kUp}, down);
      } else {
        place({x + 1, y - 1, Orient::kUp}, down);
        ++x;
      }
      --y;
    }
  }
  for (const Tri& t : region.triangles()) {
    if (t.o != Orient::kDown || covered.count(t)) continue;
    place({t.x, t.y + 1, Orient::kUp}, t);
  }
  if (static_cast<int>(covered.size()) != region.size()) {
    throw DomainError("paths do not induce a tiling");
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline Partition repeated_then(int value, int times, std::vector<int> tail) {
  std::vector<int> parts(static_cast<size_t>(std::max(times, 0)), value);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Partition(std::move(parts));
}

}  // namespace detail

inline Partition k_partition(int p, int q) {
  return detail::repeated_then(p + 1, q - 1, {p});
}
inline Partition l_partition(int p, int q) {
  return detail::repeated_then(p + 2, q, {1, 1});
}
inline Partition m_partition(int p, int q) {
  return detail::repeated_then(p + 2, q - 1, {p + 1, 1});
}
inline Partition n_partition(int p, int q) {
  return detail::repeated_then(p + 2, q - 1, {p});
}

// One-eared hexagon: main hexagon with sides p+1, r+1, q, p, r, q and an ear
// of width one and height s-1 hanging from the top-right corner.
inline Runs f_runs(int p, int q, int r, int s) {
  return {{0, p + 1}, {1, r + 1}, {2, s + q - 1}, {3, 1}, {4, 1},
          {5, s - 1}, {3, p},     {4, r},         {5, q}};
}

// The two rhombi through the bottom triangle of the ear of F(p,q,r,s); every
// tiling uses exactly one of them.
struct Connectors {
  Rhombus right, left;
};

inline Connectors f_connectors(int p, int q, int r) {
  const Tri foot{p - q + 1, r + q, Orient::kUp};
  return {{foot, {p - q + 1, r + q - 1, Orient::kDown}}, {foot, {p - q, r + q, Orient::kDown}}};
}

// Tilings of the region that contain the given rhombus.
inline ExactInt count_tilings_with(const TriRegion& region, const Rhombus& rh) {
  if (!region.contains(rh.up) || !region.contains(rh.down)) return 0;
  std::vector<Tri> rest;
  for (const Tri& t : region.triangles()) {
    if (t != rh.up && t != rh.down) rest.push_back(t);
  }
  return count_tilings(TriRegion(std::move(rest)));
}

struct HexagonSpec { int p, q, r; };
struct RLambdaSpec { Partition lambda; int r; };
struct KSpec { int p, q, r; };
struct LSpec { int p, q, r; };
struct MSpec { int p, q, r; };
struct NSpec { int p, q, r; };
struct FSpec { int p, q, r, s; };
struct EaredHexagonSpec { int p, q, r, s; };

using RegionSpec = std::variant<HexagonSpec, RLambdaSpec, KSpec, LSpec, MSpec,
                                NSpec, FSpec, EaredHexagonSpec>;

// Two-eared hexagon. Base s+q-1, then a spike of height p-1 flanked by two
// ears of width s-1, then sides s+r-1, q+1, p+1, r+1. The ears fold over
// each other unless 2s <= p+2.
inline Runs eared_hexagon_runs(int p, int q, int r, int s) {
  if (p < 1 || q < 1 || r < 1 || s < 1) throw DomainError("eared hexagon parameters must be >= 1");
  if (2 * s > p + 2) throw DomainError("eared hexagon needs 2s <= p+2");
  return {{0, s + q - 1}, {1, 1}, {2, 1}, {3, s - 1}, {1, p - 1}, {5, s - 1},
          {1, 1},         {0, 1}, {2, s + r - 1}, {3, q + 1}, {4, p + 1}, {5, r + 1}};
}

// Repeatedly removes triangles with a single neighbour together with that
// neighbour; such pairs lie in every tiling.
inline TriRegion strip_forced(const TriRegion& region) {
  std::vector<Tri> tris = region.triangles();
  for (bool changed = true; changed;) {
    changed = false;
    const TriRegion cur(tris);
    std::vector<char> gone(tris.size(), 0);
    for (size_t i = 0; i < tris.size(); ++i) {
      if (gone[i]) continue;
      int count = 0, only = -1;
      for (const Tri& nb : tri_neighbors(tris[i])) {
        const int j = cur.index_of(nb);
        if (j >= 0 && !gone[static_cast<size_t>(j)]) {
          ++count;
          only = j;
        }
      }
      if (count == 1) {
        gone[i] = gone[static_cast<size_t>(only)] = 1;
        changed = true;
      }
    }
    std::vector<Tri> next;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (!gone[i]) next.push_back(tris[i]);
    }
    tris = std::move(next);
  }
  return TriRegion(std::move(tris));
}

struct RegionBuilder {
  TriRegion operator()(const HexagonSpec& h) const { return build_hexagon(h.p, h.q, h.r); }
  TriRegion operator()(const RLambdaSpec& s) const { return build_R(s.lambda, s.r); }
  TriRegion operator()(const KSpec& s) const {
    positive(s.p, s.q, 1);
    if (s.r < 0) throw DomainError("K needs r >= 0");
    return build_R(k_partition(s.p, s.q), s.r);
  }
  TriRegion operator()(const LSpec& s) const {
    positive(s.p, s.q, 1);
    if (s.r < 2) throw DomainError("L needs r >= 2");
    return build_R(l_partition(s.p, s.q), s.r - 2);
  }
  TriRegion operator()(const MSpec& s) const {
    positive(s.p, s.q, s.r);
    return build_R(m_partition(s.p, s.q), s.r - 1);
  }
  TriRegion operator()(const NSpec& s) const {
    positive(s.p, s.q, 1);
    if (s.r < 0) throw DomainError("N needs r >= 0");
    return build_R(n_partition(s.p, s.q), s.r);
  }
  TriRegion operator()(const FSpec& s) const {
    positive(s.p, s.q, s.r);
    if (s.s < 1) throw DomainError("F needs s >= 1");
    return TriRegion::from_boundary({0, 0}, f_runs(s.p, s.q, s.r, s.s));
  }
  TriRegion operator()(const EaredHexagonSpec& s) const {
    positive(s.p, s.q, s.r);
    return TriRegion::from_boundary({0, 0}, eared_hexagon_runs(s.p, s.q, s.r, s.s));
  }

 private:
  static void positive(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1) throw DomainError("region parameters must be >= 1");
  }
};

inline TriRegion build_special(const RegionSpec& spec) {
  return std::visit(RegionBuilder{}, spec);
}

inline std::string region_name(const RegionSpec& spec) {
  static const char* names[] = {"Hexagon", "RLambda", "K", "L", "M", "N", "F", "EaredHexagon"};
  return names[spec.index()];
}

}  // namespace fplcount
