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

// Reduction of FPL counts for two families of matchings to rhombus tilings.
//
// Family A (n = p+q+r+1): p-1 nested arches around two small arches,
// followed clockwise by q nested arches and r nested arches.
// Family B (n = p+q+r+2): p-1 nested arches around "()(())", followed
// clockwise by q and r nested arches.
//
// P, Q, R denote the centres of the three bundles. A centre sits on an
// unoccupied external link.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fplcount/exact.hpp"
#include "fplcount/formulas.hpp"
#include "fplcount/fpl.hpp"
#include "fplcount/lattice.hpp"

namespace fplcount {

enum class Family { kA, kB };

struct Placement {
  Family family = Family::kA;
  int p = 0, q = 0, r = 0, s = 0;
  int n = 0;
  int center_p = 0, center_q = 0, center_r = 0;  // labels in 1..4n
  LinkPattern pattern;
};

namespace detail {

inline void add_bundle(std::vector<std::pair<int, int>>& pairs, int center,
                       int first_gap, int count) {
  for (int j = 0; j < count; ++j) {
    const int d = first_gap + 2 * j;
    pairs.emplace_back(center - d, center + d);
  }
}

inline Placement build_placement(Family fam, int p, int q, int r) {
  if (p < 2 || q < 1 || r < 1) {
    throw DomainError("pattern requires p >= 2, q >= 1, r >= 1");
  }
  Placement pl;
  pl.family = fam;
  pl.p = p;
  pl.q = q;
  pl.r = r;
  pl.s = p / 2;
  std::vector<std::pair<int, int>> pairs;
  int cp = 0, half_width = 0;
  if (fam == Family::kA) {
    pl.n = p + q + r + 1;
    cp = r + pl.s + 1;
    pairs.emplace_back(cp - 3, cp - 1);
    pairs.emplace_back(cp + 1, cp + 3);
    add_bundle(pairs, cp, 5, p - 1);
    half_width = 2 * p + 1;
  } else {
    pl.n = p + q + r + 2;
    cp = r + pl.s + 2;
    pairs.emplace_back(cp - 5, cp - 3);
    pairs.emplace_back(cp - 1, cp + 5);
    pairs.emplace_back(cp + 1, cp + 3);
    add_bundle(pairs, cp, 7, p - 1);
    half_width = 2 * p + 3;
  }
  const int cq = cp + half_width + 2 * q + 1;
  const int cr = cq + 2 * q + 2 * r;
  add_bundle(pairs, cq, 1, q);
  add_bundle(pairs, cr, 1, r);
  const Grid g(pl.n);
  pl.center_p = g.normalize(cp);
  pl.center_q = g.normalize(cq);
  pl.center_r = g.normalize(cr);
  pl.pattern = make_pattern(pl.n, std::move(pairs));
  validate_pattern(pl.pattern);
  return pl;
}

}  // namespace detail

inline Placement placement_A(int p, int q, int r) {
  return detail::build_placement(Family::kA, p, q, r);
}
inline Placement placement_B(int p, int q, int r) {
  return detail::build_placement(Family::kB, p, q, r);
}
inline LinkPattern zuber_pattern_A(int p, int q, int r) {
  return placement_A(p, q, r).pattern;
}
inline LinkPattern zuber_pattern_B(int p, int q, int r) {
  return placement_B(p, q, r).pattern;
}

// ---------------------------------------------------------------------------
// Fixed edges.

enum class Provenance { kTriangle, kZigZag, kPropagation, kConsensus, kCase };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kTriangle: return "triangle";
    case Provenance::kZigZag: return "zigzag";
    case Provenance::kPropagation: return "propagation";
    case Provenance::kConsensus: return "consensus";
    case Provenance::kCase: return "case";
  }
  return "?";
}

// Edges that every configuration under consideration occupies.
struct FixedEdgeSet {
  EdgeSet edges;
  std::map<int, Provenance> tags;

  FixedEdgeSet() = default;
  explicit FixedEdgeSet(int n) : edges(n) {}

  int n() const { return edges.n(); }
  void add(int edge, Provenance why) {
    if (!edges.contains(edge)) {
      edges.set(edge);
      tags[edge] = why;
    }
  }
  void add_all(const FixedEdgeSet& other) {
    for (int e : other.edges.edges()) add(e, other.tags.at(e));
  }
  bool subset_of(const FixedEdgeSet& other) const {
    return edges.subset_of(other.edges);
  }
  int size() const { return edges.size(); }
};

inline FixedEdgeSet consensus_of(const std::vector<FplConfig>& configs) {
  if (configs.empty()) throw DomainError("no configuration has this matching");
  EdgeSet common = configs.front().edges();
  for (const FplConfig& c : configs) common.intersect_with(c.edges());
  FixedEdgeSet out(common.n());
  for (int e : common.edges()) out.add(e, Provenance::kConsensus);
  return out;
}

inline FixedEdgeSet consensus_fixed(const LinkPattern& pattern,
                                    int max_n = kMaxEnumerationN) {
  return consensus_of(configurations_with(pattern, max_n));
}

// ---------------------------------------------------------------------------
// Free vertices.

// Free vertices carry exactly one fixed edge; two of them are neighbours when
// joined by a grid edge that is not fixed.
struct FreeVertexGraph {
  int n = 0;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs, first < second
  std::vector<int> grid_edges;             // grid edge realising each pair

  int index_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
  }
};

inline FreeVertexGraph free_vertex_graph(const FixedEdgeSet& fixed) {
  const int n = fixed.n();
  const Grid g(n);
  FreeVertexGraph fg;
  fg.n = n;
  std::vector<int> id(static_cast<size_t>(n * n), -1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int d = degree(fixed.edges, {r, c});
      if (d == 0) {
        throw DomainError("vertex (" + std::to_string(r) + "," + std::to_string(c) +
                          ") has no fixed edge");
      }
      if (d > 2) throw DomainError("fixed edges exceed degree two");
      if (d == 1) {
        id[static_cast<size_t>(r * n + c)] = static_cast<int>(fg.vertices.size());
        fg.vertices.push_back({r, c});
      }
    }
  }
  for (size_t i = 0; i < fg.vertices.size(); ++i) {
    const Vertex v = fg.vertices[i];
    for (Dir d : {Dir::kEast, Dir::kSouth}) {
      const int e = g.edge_at(v, d);
      if (g.is_external(e) || fixed.edges.contains(e)) continue;
      const Vertex w = g.across(e, v);
      const int j = id[static_cast<size_t>(w.row * n + w.col)];
      if (j < 0) continue;
      fg.edges.emplace_back(static_cast<int>(i), j);
      fg.grid_edges.push_back(e);
    }
  }
  return fg;
}

// Number of perfect matchings, by expanding on the lowest unmatched vertex
// with memoisation on the set of unmatched vertices.
inline ExactInt count_perfect_matchings(const FreeVertexGraph& fg,
                                        std::uint64_t guard = 10'000'000) {
  const size_t nv = fg.vertices.size();
  if (nv % 2 != 0) return 0;
  const size_t words = (nv + 63) / 64;
  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : fg.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    size_t operator()(const Key& k) const {
      size_t h = 1469598103934665603ull;
      for (auto w : k) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_map<Key, ExactInt, KeyHash> memo;
  std::uint64_t steps = 0;
  std::function<ExactInt(Key&)> rec = [&](Key& left) -> ExactInt {
    if (++steps > guard) throw GuardExceeded("perfect matching guard exceeded");
    size_t v = nv;
    for (size_t w = 0; w < words; ++w) {
      if (left[w]) {
        v = w * 64 + static_cast<size_t>(std::countr_zero(left[w]));
        break;
      }
    }
    if (v == nv) return 1;
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    const Key saved = left;
    ExactInt total = 0;
    left[v / 64] &= ~(1ull << (v % 64));
    for (int u : adj[v]) {
      const auto uu = static_cast<size_t>(u);
      if (!(left[uu / 64] >> (uu % 64) & 1ull)) continue;
      left[uu / 64] &= ~(1ull << (uu % 64));
      total += rec(left);
      left[uu / 64] |= 1ull << (uu % 64);
    }
    left = saved;
    memo.emplace(saved, total);
    return total;
  };
  Key all(words, 0);
  for (size_t v = 0; v < nv; ++v) all[v / 64] |= 1ull << (v % 64);
  return rec(all);
}

// Completes the fixed edges with one perfect matching of the free vertices.
inline std::vector<EdgeSet> completions(const FixedEdgeSet& fixed,
                                        const FreeVertexGraph& fg,
                                        std::uint64_t guard = 10'000'000) {
  std::vector<EdgeSet> out;
  std::vector<char> used(fg.vertices.size(), 0);
  EdgeSet cur = fixed.edges;
  std::function<void()> rec = [&]() {
    size_t v = 0;
    while (v < used.size() && used[v]) ++v;
    if (v == used.size()) {
      if (out.size() >= guard) throw GuardExceeded("completion guard exceeded");
      out.push_back(cur);
      return;
    }
    used[v] = 1;
    for (size_t k = 0; k < fg.edges.size(); ++k) {
      auto [a, b] = fg.edges[k];
      const int other = a == static_cast<int>(v) ? b : (b == static_cast<int>(v) ? a : -1);
      if (other < 0 || used[static_cast<size_t>(other)]) continue;
      used[static_cast<size_t>(other)] = 1;
      cur.set(fg.grid_edges[k]);
      rec();
      cur.set(fg.grid_edges[k], false);
      used[static_cast<size_t>(other)] = 0;
    }
    used[v] = 0;
  };
  rec();
  return out;
}

// Places a triangle on every free vertex so that neighbours get adjacent
// triangles. The three non-fixed directions at a vertex, in counter-clockwise
// order, are sent to the three sides of its triangle in counter-clockwise
// order. Returns std::nullopt if the placement is inconsistent.
inline std::optional<TriRegion> embed_free_vertices(const FixedEdgeSet& fixed,
                                                    const FreeVertexGraph& fg) {
  const Grid g(fg.n);
  const size_t nv = fg.vertices.size();
  if (nv == 0) return TriRegion{};
  // Counter-clockwise on screen (row index grows downwards).
  constexpr std::array<Dir, 4> kCcw{Dir::kEast, Dir::kNorth, Dir::kWest, Dir::kSouth};
  auto free_dirs = [&](Vertex v) {
    std::array<Dir, 3> out{};
    int k = 0;
    for (Dir d : kCcw) {
      if (!fixed.edges.contains(g.edge_at(v, d))) {
        if (k == 3) throw InternalError("free vertex with four open directions");
        out[static_cast<size_t>(k++)] = d;
      }
    }
    return out;
  };
  // Neighbours of a triangle in counter-clockwise order of its sides.
  auto sides = [](const Tri& t) -> std::array<Tri, 3> {
    const auto nb = tri_neighbors(t);
    if (t.o == Orient::kUp) return {nb[2], nb[0], nb[1]};
    return {nb[1], nb[2], nb[0]};
  };
  std::vector<std::optional<Tri>> tri(nv);
  std::vector<int> shift(nv, 0);
  std::vector<std::vector<std::pair<Dir, int>>> adj(nv);
  for (size_t k = 0; k < fg.edges.size(); ++k) {
    auto [a, b] = fg.edges[k];
    const auto [p0, p1] = g.endpoints(fg.grid_edges[k]);
    const Vertex va = fg.vertices[static_cast<size_t>(a)];
    const bool a_first = va == p0;
    const Vertex vb = a_first ? p1 : p0;
    auto dir_to = [](Vertex from, Vertex to) {
      if (to.row < from.row) return Dir::kNorth;
      if (to.row > from.row) return Dir::kSouth;
      return to.col > from.col ? Dir::kEast : Dir::kWest;
    };
    adj[static_cast<size_t>(a)].emplace_back(dir_to(va, vb), b);
    adj[static_cast<size_t>(b)].emplace_back(dir_to(vb, va), a);
  }
  auto position = [](const std::array<Dir, 3>& dirs, Dir d) {
    for (int i = 0; i < 3; ++i) {
      if (dirs[static_cast<size_t>(i)] == d) return i;
    }
    throw InternalError("direction is fixed");
  };
  std::map<Tri, int> owner;
  for (size_t root = 0; root < nv; ++root) {
    if (tri[root]) continue;
    // Separate components are placed far apart.
    tri[root] = Tri{static_cast<int>(root) * 1000, 0, Orient::kUp};
    shift[root] = 0;
    owner[*tri[root]] = static_cast<int>(root);
    std::deque<size_t> queue{root};
    while (!queue.empty()) {
      const size_t v = queue.front();
      queue.pop_front();
      const auto dv = free_dirs(fg.vertices[v]);
      const auto sv = sides(*tri[v]);
      for (auto [d, w] : adj[v]) {
        const int side = (position(dv, d) + shift[v]) % 3;
        const Tri target = sv[static_cast<size_t>(side)];
        const auto wu = static_cast<size_t>(w);
        if (tri[wu]) {
          if (*tri[wu] != target) return std::nullopt;
          continue;
        }
        if (owner.count(target)) return std::nullopt;
        tri[wu] = target;
        owner[target] = w;
        const auto sw = sides(target);
        int back_side = -1;
        for (int i = 0; i < 3; ++i) {
          if (sw[static_cast<size_t>(i)] == *tri[v]) back_side = i;
        }
        const Dir back = d == Dir::kNorth ? Dir::kSouth
                         : d == Dir::kSouth ? Dir::kNorth
                         : d == Dir::kEast  ? Dir::kWest
                                            : Dir::kEast;
        shift[wu] = ((back_side - position(free_dirs(fg.vertices[wu]), back)) % 3 + 3) % 3;
        queue.push_back(wu);
      }
    }
  }
  // Triangles adjacent in the lattice must be neighbours in the graph.
  std::set<std::pair<int, int>> graph_edges(fg.edges.begin(), fg.edges.end());
  for (auto& [t, i] : owner) {
    for (const Tri& nb : tri_neighbors(t)) {
      auto it = owner.find(nb);
      if (it == owner.end()) continue;
      const auto e = std::minmax(i, it->second);
      if (!graph_edges.count({e.first, e.second})) return std::nullopt;
    }
  }
  std::vector<Tri> tris;
  for (auto& t : tri) tris.push_back(*t);
  return TriRegion(std::move(tris));
}

// ---------------------------------------------------------------------------
// Triangles of fixed edges.

// Run of every second external link from label a to label b (clockwise),
// all on different loops. The fixed edges form a right isosceles triangle
// over the segment [LN(a), LN(b)]; the parts that stick out past a corner are
// folded back into the square about that corner and become zig-zag paths.
inline FixedEdgeSet fixed_triangle(int n, int a, int b, int which) {
  const Grid g(n);
  const int la = g.ln(a);
  int lb = g.ln(b);
  if (lb < la) lb += 4 * n;
  if ((lb - la) % 2 != 0) throw DomainError("run labels must have equal parity");
  switch (which) {
    case 1:
      if (!(1 <= la && la < lb && lb <= n)) throw DomainError("case 1 needs 1 <= LN(A) < LN(B) <= n");
      break;
    case 2:
      if (!(1 <= la && la <= n && n < lb && n - la > lb - (n + 1))) {
        throw DomainError("case 2 needs A on top, B on the right, n-LN(A) > LN(B)-(n+1)");
      }
      break;
    case 3:
      if (!(n < lb && lb <= 2 * n && -n < la && la <= 0)) {
        throw DomainError("case 3 needs A on the left and B on the right");
      }
      break;
    default:
      throw DomainError("case must be 1, 2 or 3");
  }
  // Unfolded column of label x on the top line is x - 1.
  const int ca = la - 1;
  const int cb = lb - 1;
  FixedEdgeSet out(n);
  for (int d = 0; 2 * d <= cb - ca; ++d) {
    for (int c = ca + d; c <= cb - d; c += 2) {
      if (c >= 0 && c < n) {
        if (d <= n) out.add(g.vertical(d, c), Provenance::kTriangle);
      } else if (c >= n) {
        const int row = c - n;
        if (row < n && n - d >= 0) out.add(g.horizontal(row, n - d), Provenance::kZigZag);
      } else {
        const int row = -1 - c;
        if (row < n && d <= n) out.add(g.horizontal(row, d), Provenance::kZigZag);
      }
    }
  }
  return out;
}

// Image of an edge under k quarter turns of the square (clockwise), which
// sends label L to L + k*n.
inline int rotate_edge(int n, int edge, int k) {
  const Grid g(n);
  auto [a, b] = g.endpoints(edge);
  for (int t = 0; t < ((k % 4) + 4) % 4; ++t) {
    a = {a.col, n - 1 - a.row};
    b = {b.col, n - 1 - b.row};
  }
  const Vertex in = g.inside(a) ? a : b;
  const Vertex other = g.inside(a) ? b : a;
  for (int e : g.incident(in)) {
    auto [x, y] = g.endpoints(e);
    if ((x == in && y == other) || (y == in && x == other)) return e;
  }
  throw InternalError("rotated edge not found");
}

// A run of every second link, all on different loops, with the case of the
// triangle rule it falls under after `turns` anticlockwise quarter turns.
struct TriangleRun {
  int first = 0, last = 0;  // labels on the original square
  int which = 0;            // 1, 2 or 3
  int turns = 0;
};

// Runs of occupied links with no two matched together, each cut to the
// longest piece the triangle rule covers; pieces inside longer ones are
// dropped.
inline std::vector<TriangleRun> triangle_runs(const LinkPattern& pattern) {
  const int n = pattern.n;
  const Grid g(n);
  std::map<int, int> partner;
  for (auto [a, b] : pattern.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<TriangleRun> found;
  std::vector<std::set<int>> members;
  for (auto [start, _] : partner) {
    std::vector<int> cur{start};
    for (int step = 1; step < 2 * n; ++step) {
      const int l = g.normalize(start + 2 * step);
      bool clash = false;
      for (int x : cur) clash = clash || partner[x] == l;
      if (clash) break;
      cur.push_back(l);
    }
    // Longest prefix that fits one of the cases after some quarter turns.
    bool done = false;
    for (size_t len = cur.size(); len >= 2 && !done; --len) {
      const int a = cur.front();
      const int b = cur[len - 1];
      for (int k = 0; k < 4 && !done; ++k) {
        for (int which = 1; which <= 3 && !done; ++which) {
          try {
            (void)fixed_triangle(n, g.normalize(a - k * n), g.normalize(b - k * n), which);
            found.push_back({a, b, which, k});
            members.emplace_back(cur.begin(), cur.begin() + static_cast<long>(len));
            done = true;
          } catch (const DomainError&) {
          }
        }
      }
    }
  }
  std::vector<TriangleRun> out;
  for (size_t i = 0; i < found.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < found.size() && !contained; ++j) {
      if (i == j || members[j].size() <= members[i].size()) continue;
      contained = std::includes(members[j].begin(), members[j].end(), members[i].begin(),
                                members[i].end());
    }
    if (!contained) out.push_back(found[i]);
  }
  return out;
}

// The triangle of a run, mapped back onto the original square.
inline FixedEdgeSet fixed_triangle(int n, const TriangleRun& run) {
  const Grid g(n);
  const FixedEdgeSet rotated = fixed_triangle(n, g.normalize(run.first - run.turns * n),
                                              g.normalize(run.last - run.turns * n), run.which);
  FixedEdgeSet out(n);
  for (int e : rotated.edges.edges()) out.add(rotate_edge(n, e, run.turns), rotated.tags.at(e));
  return out;
}

// ---------------------------------------------------------------------------
// Local propagation.

struct PartialConfig {
  EdgeSet occupied;
  EdgeSet empty;

  explicit PartialConfig(int n) : occupied(n), empty(n) {}
  int n() const { return occupied.n(); }
};

// Boundary data of a placed pattern: its links occupied, the others empty.
inline PartialConfig boundary_of(const LinkPattern& pattern) {
  const Grid g(pattern.n);
  PartialConfig pc(pattern.n);
  std::vector<char> used(static_cast<size_t>(4 * pattern.n + 1), 0);
  for (auto [a, b] : pattern.pairs) used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 1;
  for (int l = 1; l <= 4 * pattern.n; ++l) {
    (used[static_cast<size_t>(l)] ? pc.occupied : pc.empty).set(g.link_edge(l));
  }
  return pc;
}

// Consecutive occupied links (every second label) that lie on one side and
// on pairwise different loops.
struct LinkRun {
  std::vector<int> labels;
};

// Maximal runs on each side in which no two links are matched together.
inline std::vector<LinkRun> distinct_runs(const LinkPattern& pattern) {
  const int n = pattern.n;
  std::map<int, int> partner;
  for (auto [a, b] : pattern.pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<LinkRun> runs;
  for (int side = 0; side < 4; ++side) {
    int last_end = 0;
    for (int start = side * n + 1; start <= side * n + n; ++start) {
      if (!partner.count(start)) continue;
      std::vector<int> cur{start};
      for (int l = start + 2; l <= side * n + n && partner.count(l); l += 2) {
        bool clash = false;
        for (int x : cur) clash = clash || partner[x] == l;
        if (clash) break;
        cur.push_back(l);
      }
      if (cur.size() >= 2 && cur.back() > last_end) {
        last_end = cur.back();
        runs.push_back({cur});
      }
    }
  }
  return runs;
}

// How a firing of the local rule was justified: the edge behind the middle
// vertex is known to be empty, or the middle edge is occupied and the loop
// hypotheses are inherited from the previous step.
enum class FiringKind { kEmptyMiddle, kInherited };

struct Firing {
  Vertex vertex;
  int forced = -1;
  int left = -1, right = -1, middle = -1;
  FiringKind kind = FiringKind::kEmptyMiddle;
};

struct PropagationResult {
  FixedEdgeSet fixed;
  EdgeSet empty;
  std::vector<Firing> firings;
};

namespace detail {

inline Vertex step(Vertex v, Dir d) {
  switch (d) {
    case Dir::kNorth: return {v.row - 1, v.col};
    case Dir::kSouth: return {v.row + 1, v.col};
    case Dir::kWest: return {v.row, v.col - 1};
    case Dir::kEast: return {v.row, v.col + 1};
  }
  return v;
}

inline Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

// Each vertex has degree two: saturate and complete.
inline bool propagate_degrees(const Grid& g, FixedEdgeSet& fixed, EdgeSet& empty) {
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int r = 0; r < g.n(); ++r) {
      for (int c = 0; c < g.n(); ++c) {
        const auto inc = g.incident({r, c});
        int occ = 0, open = 0;
        for (int e : inc) {
          if (fixed.edges.contains(e)) ++occ;
          else if (!empty.contains(e)) ++open;
        }
        if (occ > 2 || occ + open < 2) throw DomainError("boundary hypotheses are not satisfiable");
        for (int e : inc) {
          if (fixed.edges.contains(e) || empty.contains(e)) continue;
          if (occ == 2) empty.set(e);
          else if (occ + open == 2) fixed.add(e, Provenance::kPropagation);
          else continue;
          again = changed = true;
        }
      }
    }
  }
  return changed;
}

}  // namespace detail

// Closure of the boundary data under the local rule applied to each run of
// links on different loops, interleaved with degree completion.
inline PropagationResult degier_propagate(const PartialConfig& start,
                                          const std::vector<LinkRun>& runs) {
  const int n = start.n();
  const Grid g(n);
  PropagationResult res{FixedEdgeSet(n), start.empty, {}};
  for (int e : start.occupied.edges()) res.fixed.add(e, Provenance::kPropagation);
  std::set<int> seen_firing;

  for (bool changed = true; changed;) {
    changed = detail::propagate_degrees(g, res.fixed, res.empty);
    for (const LinkRun& run : runs) {
      const LinkSite s0 = g.site(run.labels.front());
      const Dir in = detail::opposite(s0.dir);
      // Front: occupied edges with their inner endpoints, plus the edges of
      // the previous front keyed by inner endpoint.
      std::vector<std::pair<int, Vertex>> front;
      for (int l : run.labels) front.emplace_back(g.link_edge(l), g.site(l).vertex);
      std::map<Vertex, int> previous;
      while (front.size() >= 2) {
        std::vector<std::pair<int, Vertex>> next;
        for (size_t i = 0; i + 1 < front.size(); ++i) {
          const Vertex xl = front[i].second;
          const Vertex xr = front[i + 1].second;
          if (std::abs(xl.row - xr.row) + std::abs(xl.col - xr.col) != 2) continue;
          const Vertex v{(xl.row + xr.row) / 2, (xl.col + xr.col) / 2};
          if (!g.inside(v)) continue;
          const int behind = g.edge_at(v, detail::opposite(in));
          Firing f{v, g.edge_at(v, in), front[i].first, front[i + 1].first, -1,
                   FiringKind::kEmptyMiddle};
          if (!res.empty.contains(behind)) {
            auto it = previous.find(detail::step(v, detail::opposite(in)));
            if (it == previous.end() || !res.fixed.edges.contains(it->second)) continue;
            f.middle = it->second;
            f.kind = FiringKind::kInherited;
          }
          if (res.empty.contains(f.forced)) throw DomainError("boundary hypotheses are not satisfiable");
          if (!res.fixed.edges.contains(f.forced)) {
            res.fixed.add(f.forced, Provenance::kPropagation);
            changed = true;
          }
          if (seen_firing.insert(f.forced).second) res.firings.push_back(f);
          next.emplace_back(f.forced, detail::step(v, in));
        }
        previous.clear();
        for (auto& [e, x] : front) previous[x] = e;
        // Firings that are not neighbours end up four apart and never pair.
        front = std::move(next);
      }
    }
  }
  return res;
}

// Checks the loop hypotheses behind each firing against actual
// configurations: the two side edges lie on different loops; the middle edge
// lies on a third loop (condition i); or it shares a loop with a side edge
// only through the edge joining that side edge's outer end to the middle
// vertex (condition ii).
struct FiringAudit {
  long firings = 0;
  long configs = 0;
  long side_loops_equal = 0;    // must stay 0
  long third_loop_fails = 0;    // (config, firing) pairs where (i) fails
  long second_rule_fails = 0;   // pairs where (ii) fails; must stay 0
  bool sound() const { return side_loops_equal == 0 && second_rule_fails == 0; }
};

namespace detail {

// Component id of each edge's loop or path in a configuration.
inline std::vector<int> loop_ids(const EdgeSet& edges) {
  const Grid g(edges.n());
  const int n = g.n();
  std::vector<int> parent(static_cast<size_t>(n * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int e : edges.edges()) {
    auto [a, b] = g.endpoints(e);
    if (g.inside(a) && g.inside(b)) {
      parent[static_cast<size_t>(find(a.row * n + a.col))] = find(b.row * n + b.col);
    }
  }
  std::vector<int> id(static_cast<size_t>(g.num_edges()), -1);
  for (int e : edges.edges()) {
    auto [a, b] = g.endpoints(e);
    const Vertex in = g.inside(a) ? a : b;
    id[static_cast<size_t>(e)] = find(in.row * n + in.col);
  }
  return id;
}

}  // namespace detail

inline FiringAudit audit_firings(const std::vector<Firing>& firings,
                                 const std::vector<FplConfig>& configs) {
  FiringAudit audit;
  audit.configs = static_cast<long>(configs.size());
  if (configs.empty()) return audit;
  const Grid g(configs.front().n());
  for (const Firing& f : firings) {
    if (f.kind != FiringKind::kInherited) continue;
    ++audit.firings;
    // Middle vertex and the outer ends of the side edges.
    auto [m0, m1] = g.endpoints(f.middle);
    const Vertex w = (std::abs(m0.row - f.vertex.row) + std::abs(m0.col - f.vertex.col) == 1) ? m0 : m1;
    auto outer = [&](int edge) {
      auto [a, b] = g.endpoints(edge);
      const bool a_next = std::abs(a.row - f.vertex.row) + std::abs(a.col - f.vertex.col) == 1;
      return a_next ? b : a;
    };
    auto joining = [&](Vertex a, Vertex b) {
      for (int e : g.incident(a)) {
        if (g.across(e, a) == b) return e;
      }
      return -1;
    };
    const int link_l = joining(outer(f.left), w);
    const int link_r = joining(outer(f.right), w);
    for (const FplConfig& c : configs) {
      const auto id = detail::loop_ids(c.edges());
      const int l = id[static_cast<size_t>(f.left)];
      const int r = id[static_cast<size_t>(f.right)];
      const int m = id[static_cast<size_t>(f.middle)];
      if (l == r) ++audit.side_loops_equal;
      if (m == l || m == r) ++audit.third_loop_fails;
      const bool ok_l = m != l || (link_l >= 0 && c.occupied(link_l));
      const bool ok_r = m != r || (link_r >= 0 && c.occupied(link_r));
      if (!ok_l || !ok_r) ++audit.second_rule_fails;
    }
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Case splits near P.

// Family A: the vertical edge below P together with the two horizontal edges
// flanking it on the left (side 0) or on the right (side 1).
inline std::array<int, 3> case_edges_A(const Placement& pl, int side) {
  if (side != 0 && side != 1) throw DomainError("side must be 0 or 1");
  const Grid g(pl.n);
  const int cp = pl.center_p - 1;
  const int c = cp + side;
  return {g.vertical(1, cp), g.horizontal(0, c), g.horizontal(1, c)};
}

// Family B: two edges near P decide the four cases.
inline std::pair<int, int> case_edges_B(const Placement& pl) {
  const Grid g(pl.n);
  const int cp = pl.center_p - 1;
  return {g.horizontal(1, cp - 1), g.vertical(3, cp - 2)};
}

inline bool in_case_A(const Placement& pl, const FplConfig& c, int side) {
  for (int e : case_edges_A(pl, side)) {
    if (!c.occupied(e)) return false;
  }
  return true;
}

// Cases 1..4: (h, v) = (on, on), (off, on), (off, off), (on, off).
inline int case_of_B(const Placement& pl, const FplConfig& c) {
  auto [h, v] = case_edges_B(pl);
  const bool hh = c.occupied(h), vv = c.occupied(v);
  if (hh && vv) return 1;
  if (!hh && vv) return 2;
  if (!hh && !vv) return 3;
  return 4;
}

struct CaseData {
  int index = 0;
  std::vector<FplConfig> configs;
  FixedEdgeSet fixed;
};

// Splits the configurations of placement A. The fixed set of each case is the
// global consensus plus the three case edges.
inline std::array<CaseData, 2> split_A(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const Placement pl = placement_A(p, q, r);
  const auto configs = configurations_with(pl.pattern, max_n);
  const FixedEdgeSet common = consensus_of(configs);
  std::array<CaseData, 2> out;
  for (int side = 0; side < 2; ++side) {
    CaseData& cd = out[static_cast<size_t>(side)];
    cd.index = side + 1;
    for (const FplConfig& c : configs) {
      if (in_case_A(pl, c, side)) cd.configs.push_back(c);
    }
    cd.fixed = common;
    for (int e : case_edges_A(pl, side)) cd.fixed.add(e, Provenance::kCase);
  }
  return out;
}

// Splits the configurations of placement B; each case keeps the edges common
// to its own configurations.
inline std::array<CaseData, 4> split_B(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const Placement pl = placement_B(p, q, r);
  const auto configs = configurations_with(pl.pattern, max_n);
  const FixedEdgeSet common = consensus_of(configs);
  std::array<CaseData, 4> out;
  for (int k = 0; k < 4; ++k) out[static_cast<size_t>(k)].index = k + 1;
  for (const FplConfig& c : configs) out[static_cast<size_t>(case_of_B(pl, c) - 1)].configs.push_back(c);
  for (CaseData& cd : out) {
    if (cd.configs.empty()) continue;
    cd.fixed = common;
    const FixedEdgeSet own = consensus_of(cd.configs);
    for (int e : own.edges.edges()) cd.fixed.add(e, Provenance::kCase);
  }
  return out;
}

// Formula values for the cases: f(p,q,r,s_L) and f(p,r,q,s_R), where
// s_L = s_R = p/2 for even p and s_L = (p+1)/2, s_R = (p-1)/2 for odd p.
inline std::array<ExactInt, 2> case_formulas_A(long p, long q, long r) {
  const long sl = p % 2 == 0 ? p / 2 : (p + 1) / 2;
  const long sr = p % 2 == 0 ? p / 2 : (p - 1) / 2;
  return {f_formula(p, q, r, sl), f_formula(p, r, q, sr)};
}

inline std::array<ExactInt, 2> case_counts_A(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const auto split = split_A(p, q, r, max_n);
  return {ExactInt(static_cast<long>(split[0].configs.size())),
          ExactInt(static_cast<long>(split[1].configs.size()))};
}

inline std::array<ExactInt, 4> case_counts_B(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const auto split = split_B(p, q, r, max_n);
  std::array<ExactInt, 4> out;
  for (size_t k = 0; k < 4; ++k) out[k] = static_cast<long>(split[k].configs.size());
  return out;
}

// Every count attached to one case.
struct CaseReport {
  int index = 0;
  ExactInt count;        // configurations in the case
  ExactInt matchings;    // perfect matchings of the free-vertex graph
  ExactInt completions;  // completions that are configurations of the case
  ExactInt tilings;      // tilings of the embedded region (-1 if none)
  ExactInt formula;
  bool embedded = false;
  bool match() const {
    return embedded && count == matchings && count == completions && count == tilings &&
           count == formula && count > 0;
  }
};

inline CaseReport report_case(const CaseData& cd, const LinkPattern& pattern,
                              const ExactInt& formula) {
  CaseReport rep;
  rep.index = cd.index;
  rep.count = static_cast<long>(cd.configs.size());
  rep.formula = formula;
  if (cd.configs.empty()) return rep;
  const FreeVertexGraph fg = free_vertex_graph(cd.fixed);
  rep.matchings = count_perfect_matchings(fg);
  long good = 0;
  for (const EdgeSet& e : completions(cd.fixed, fg)) {
    try {
      if (trace_matching(FplConfig::from_edges(e)) == pattern) ++good;
    } catch (const DomainError&) {
    }
  }
  rep.completions = good;
  const auto region = embed_free_vertices(cd.fixed, fg);
  rep.embedded = region.has_value();
  rep.tilings = region ? count_tilings(*region) : ExactInt(-1);
  return rep;
}

inline std::array<CaseReport, 2> case_reports_A(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const auto split = split_A(p, q, r, max_n);
  const auto f = case_formulas_A(p, q, r);
  const LinkPattern pat = zuber_pattern_A(p, q, r);
  return {report_case(split[0], pat, f[0]), report_case(split[1], pat, f[1])};
}

inline std::array<CaseReport, 4> case_reports_B(int p, int q, int r, int max_n = kMaxEnumerationN) {
  const auto split = split_B(p, q, r, max_n);
  const auto f = z2_case_values(p, q, r);
  const LinkPattern pat = zuber_pattern_B(p, q, r);
  std::array<CaseReport, 4> out;
  for (size_t k = 0; k < 4; ++k) out[k] = report_case(split[k], pat, f[k]);
  return out;
}

}  // namespace fplcount
