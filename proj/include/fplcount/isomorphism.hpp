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

// Graph isomorphism between free-vertex graphs and the triangle adjacency
// graph of a region.

#pragma once

#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include "fplcount/lattice.hpp"
#include "fplcount/reduction.hpp"

namespace fplcount {

namespace detail {

using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

inline UGraph make_ugraph(size_t nv, const std::vector<std::pair<int, int>>& edges) {
  UGraph g(nv);
  for (auto [a, b] : edges) boost::add_edge(static_cast<size_t>(a), static_cast<size_t>(b), g);
  return g;
}

}  // namespace detail

// Edges of the dual graph of a region: triangles sharing a side.
inline std::vector<std::pair<int, int>> region_adjacency(const TriRegion& region) {
  std::vector<std::pair<int, int>> edges;
  const auto& tris = region.triangles();
  for (size_t i = 0; i < tris.size(); ++i) {
    if (tris[i].o != Orient::kUp) continue;
    for (const Tri& nb : tri_neighbors(tris[i])) {
      const int j = region.index_of(nb);
      if (j >= 0) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return edges;
}

inline bool isomorphic(size_t nv_a, const std::vector<std::pair<int, int>>& a, size_t nv_b,
                       const std::vector<std::pair<int, int>>& b) {
  if (nv_a != nv_b || a.size() != b.size()) return false;
  const auto ga = detail::make_ugraph(nv_a, a);
  const auto gb = detail::make_ugraph(nv_b, b);
  return boost::isomorphism(ga, gb);
}

inline bool isomorphic_to_region(const FreeVertexGraph& fg, const TriRegion& region) {
  return isomorphic(fg.vertices.size(), fg.edges, static_cast<size_t>(region.size()),
                    region_adjacency(region));
}

}  // namespace fplcount
