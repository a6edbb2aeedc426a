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

// Regions of the regular triangular lattice and their rhombus tilings.
//
// Lattice points use sheared axial coordinates (x, y); the Cartesian image
// of (x, y) is (x + y/2, y*sqrt(3)/2). The up-triangle (x, y) has corners
// (x, y), (x+1, y), (x, y+1); the down-triangle (x, y) has corners
// (x+1, y), (x, y+1), (x+1, y+1).
//
// Unit steps e0..e5 point at 0, 60, ..., 300 degrees.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fplcount/exact.hpp"
#include "fplcount/partition.hpp"

namespace fplcount {

inline constexpr std::uint64_t kTilingGuard = 50'000'000;

struct LatticePoint {
  int x = 0, y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline constexpr std::array<LatticePoint, 6> kSteps{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

enum class Orient : std::uint8_t { kUp = 0, kDown = 1 };

struct Tri {
  int x = 0, y = 0;
  Orient o = Orient::kUp;

  // Row-major order: by row, then left to right within the row.
  friend bool operator==(const Tri&, const Tri&) = default;
  friend auto operator<=>(const Tri& a, const Tri& b) {
    if (a.y != b.y) return a.y <=> b.y;
    const int ka = 2 * a.x + static_cast<int>(a.o);
    const int kb = 2 * b.x + static_cast<int>(b.o);
    return ka <=> kb;
  }
};

inline std::array<Tri, 3> tri_neighbors(const Tri& t) {
  if (t.o == Orient::kUp) {
    return {{{t.x, t.y, Orient::kDown},
             {t.x - 1, t.y, Orient::kDown},
             {t.x, t.y - 1, Orient::kDown}}};
  }
  return {{{t.x, t.y, Orient::kUp},
           {t.x + 1, t.y, Orient::kUp},
           {t.x, t.y + 1, Orient::kUp}}};
}

inline std::array<LatticePoint, 3> tri_corners(const Tri& t) {
  if (t.o == Orient::kUp) return {{{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}}};
  return {{{t.x + 1, t.y}, {t.x + 1, t.y + 1}, {t.x, t.y + 1}}};
}

// A finite set of unit triangles, kept sorted in row-major order.
class TriRegion {
 public:
  TriRegion() = default;
  explicit TriRegion(std::vector<Tri> tris) : tris_(std::move(tris)) {
    std::sort(tris_.begin(), tris_.end());
    tris_.erase(std::unique(tris_.begin(), tris_.end()), tris_.end());
    for (size_t i = 0; i < tris_.size(); ++i) index_[key(tris_[i])] = static_cast<int>(i);
  }

  // Region enclosed by a closed counter-clockwise boundary walk given as
  // (step index, length) runs starting at `start`.
  static TriRegion from_boundary(LatticePoint start,
                                 const std::vector<std::pair<int, int>>& runs) {
    std::vector<LatticePoint> poly{start};
    LatticePoint cur = start;
    for (auto [dir, len] : runs) {
      if (len < 0 || dir < 0 || dir > 5) throw DomainError("bad boundary run");
      for (int i = 0; i < len; ++i) {
        cur.x += kSteps[static_cast<size_t>(dir)].x;
        cur.y += kSteps[static_cast<size_t>(dir)].y;
        poly.push_back(cur);
      }
    }
    if (cur != start) throw DomainError("boundary walk does not close");
    poly.pop_back();
    int xmin = start.x, xmax = start.x, ymin = start.y, ymax = start.y;
    for (auto p : poly) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    std::vector<Tri> tris;
    for (int y = ymin; y < ymax; ++y) {
      for (int x = xmin - 1; x <= xmax; ++x) {
        for (Orient o : {Orient::kUp, Orient::kDown}) {
          const Tri t{x, y, o};
          if (inside_polygon(poly, centroid(t))) tris.push_back(t);
        }
      }
    }
    return TriRegion(std::move(tris));
  }

  const std::vector<Tri>& triangles() const { return tris_; }
  int size() const { return static_cast<int>(tris_.size()); }
  bool contains(const Tri& t) const { return index_.count(key(t)) != 0; }
  int index_of(const Tri& t) const {
    auto it = index_.find(key(t));
    return it == index_.end() ? -1 : it->second;
  }
  int count(Orient o) const {
    return static_cast<int>(std::count_if(tris_.begin(), tris_.end(),
                                          [&](const Tri& t) { return t.o == o; }));
  }

  // Counter-clockwise boundary as (step index, length) runs, starting at the
  // lowest then left-most boundary point. Assumes a single boundary cycle.
  std::vector<std::pair<int, int>> boundary_runs() const {
    std::map<LatticePoint, std::vector<int>> out_edges;
    for (const Tri& t : tris_) {
      const auto c = tri_corners(t);
      const auto nb = tri_neighbors(t);
      // Corner order is counter-clockwise; side k joins c[k] and c[k+1].
      // Neighbour across side: up -> {bottom: nb[2], right: nb[0], left: nb[1]},
      // down -> {right: nb[1], top: nb[2], left: nb[0]}.
      const std::array<int, 3> across =
          t.o == Orient::kUp ? std::array<int, 3>{2, 0, 1} : std::array<int, 3>{1, 2, 0};
      for (int k = 0; k < 3; ++k) {
        if (contains(nb[static_cast<size_t>(across[static_cast<size_t>(k)])])) continue;
        const LatticePoint a = c[static_cast<size_t>(k)];
        const LatticePoint b = c[static_cast<size_t>((k + 1) % 3)];
        out_edges[a].push_back(step_index(b.x - a.x, b.y - a.y));
      }
    }
    std::vector<std::pair<int, int>> runs;
    if (out_edges.empty()) return runs;
    LatticePoint start = out_edges.begin()->first;
    for (auto& [p, _] : out_edges) {
      if (p.y < start.y || (p.y == start.y && p.x < start.x)) start = p;
    }
    LatticePoint cur = start;
    int prev = -1;
    size_t total = 0;
    for (auto& [_, v] : out_edges) total += v.size();
    for (size_t steps = 0; steps < total; ++steps) {
      auto& options = out_edges[cur];
      if (options.empty()) throw DomainError("boundary is not a single cycle");
      // At a pinch point take the sharpest left turn.
      size_t pick = 0;
      if (options.size() > 1 && prev >= 0) {
        int best = 99;
        for (size_t i = 0; i < options.size(); ++i) {
          const int turn = (options[i] - (prev + 3) + 12) % 6;
          if (turn < best) { best = turn; pick = i; }
        }
      }
      const int d = options[pick];
      options.erase(options.begin() + static_cast<long>(pick));
      if (!runs.empty() && runs.back().first == d) ++runs.back().second;
      else runs.emplace_back(d, 1);
      cur.x += kSteps[static_cast<size_t>(d)].x;
      cur.y += kSteps[static_cast<size_t>(d)].y;
      prev = d;
      if (cur == start) break;
    }
    if (runs.size() > 1 && runs.front().first == runs.back().first) {
      runs.front().second += runs.back().second;
      runs.pop_back();
    }
    return runs;
  }

  TriRegion translated(int dx, int dy) const {
    std::vector<Tri> out;
    for (Tri t : tris_) out.push_back({t.x + dx, t.y + dy, t.o});
    return TriRegion(std::move(out));
  }

  friend bool operator==(const TriRegion& a, const TriRegion& b) {
    return a.tris_ == b.tris_;
  }

 private:
  static std::uint64_t key(const Tri& t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.x)) << 33) ^
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.y)) << 1) ^
           static_cast<std::uint64_t>(t.o);
  }
  static std::pair<double, double> cart(double x, double y) {
    return {x + y / 2.0, y * std::sqrt(3.0) / 2.0};
  }
  static std::pair<double, double> centroid(const Tri& t) {
    double sx = 0, sy = 0;
    for (auto p : tri_corners(t)) {
      auto [cx, cy] = cart(p.x, p.y);
      sx += cx;
      sy += cy;
    }
    return {sx / 3.0, sy / 3.0};
  }
  static bool inside_polygon(const std::vector<LatticePoint>& poly,
                             std::pair<double, double> pt) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
      auto [xi, yi] = cart(poly[i].x, poly[i].y);
      auto [xj, yj] = cart(poly[j].x, poly[j].y);
      if ((yi > pt.second) != (yj > pt.second) &&
          pt.first < (xj - xi) * (pt.second - yi) / (yj - yi) + xi) {
        in = !in;
      }
    }
    return in;
  }
  static int step_index(int dx, int dy) {
    for (int i = 0; i < 6; ++i) {
      if (kSteps[static_cast<size_t>(i)].x == dx && kSteps[static_cast<size_t>(i)].y == dy) {
        return i;
      }
    }
    throw InternalError("not a unit step");
  }

  std::vector<Tri> tris_;
  std::unordered_map<std::uint64_t, int> index_;
};

// A rhombus covers one up- and one adjacent down-triangle.
// True if b is the image of a under a symmetry of the lattice (rotation,
// reflection, translation). Compares boundary words.
inline bool congruent(const TriRegion& a, const TriRegion& b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  using Word = std::vector<std::pair<int, int>>;
  const Word wa = a.boundary_runs();
  const Word wb = b.boundary_runs();
  if (wa.size() != wb.size()) return false;
  auto cyclic_equal = [](const Word& x, const Word& y) {
    for (size_t shift = 0; shift < x.size(); ++shift) {
      bool ok = true;
      for (size_t i = 0; i < x.size() && ok; ++i) ok = x[(i + shift) % x.size()] == y[i];
      if (ok) return true;
    }
    return false;
  };
  Word reversed(wa.rbegin(), wa.rend());
  for (auto& [d, len] : reversed) d = (9 - d) % 6;
  const Word mirrored = std::move(reversed);
  for (int rot = 0; rot < 6; ++rot) {
    for (const Word* base : {&wa, &mirrored}) {
      Word w = *base;
      for (auto& [d, len] : w) d = (d + rot) % 6;
      if (cyclic_equal(w, wb)) return true;
    }
  }
  return false;
}

struct Rhombus {
  Tri up, down;
  friend bool operator==(const Rhombus&, const Rhombus&) = default;
  friend auto operator<=>(const Rhombus&, const Rhombus&) = default;
};

// Rhombi sorted by their up-triangle.
using Tiling = std::vector<Rhombus>;

namespace detail {

// Index-based adjacency used by the search.
struct RegionGraph {
  std::vector<Tri> tris;
  std::vector<std::array<int, 3>> nb;  // -1 where the neighbour is missing

  explicit RegionGraph(const TriRegion& region) : tris(region.triangles()) {
    nb.resize(tris.size());
    for (size_t i = 0; i < tris.size(); ++i) {
      const auto n3 = tri_neighbors(tris[i]);
      for (size_t k = 0; k < 3; ++k) nb[i][k] = region.index_of(n3[k]);
    }
  }

  Tiling to_tiling(const std::vector<int>& partner) const {
    Tiling t;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (tris[i].o == Orient::kUp) {
        t.push_back({tris[i], tris[static_cast<size_t>(partner[i])]});
      }
    }
    return t;
  }
};

class TilingSearch {
 public:
  TilingSearch(const RegionGraph& g, std::uint64_t guard)
      : g_(g), partner_(g.tris.size(), -1), limit_(guard) {}

  // Calls fn(partner) for each tiling. fn returns false to stop early.
  void run(const std::function<bool(const std::vector<int>&)>& fn) {
    fn_ = &fn;
    stop_ = false;
    recurse(0);
  }

  std::uint64_t produced() const { return produced_; }

  void seed(const std::vector<int>& partner, size_t cursor) {
    partner_ = partner;
    start_ = cursor;
  }

  // Partial states after fixing the first `depth` choices.
  std::vector<std::pair<std::vector<int>, size_t>> frontier(int depth) {
    std::vector<std::pair<std::vector<int>, size_t>> out;
    collect(0, depth, out);
    return out;
  }

 private:
  void recurse(size_t cursor) {
    if (stop_) return;
    if (cursor < start_) cursor = start_;
    while (cursor < partner_.size() && partner_[cursor] >= 0) ++cursor;
    if (cursor == partner_.size()) {
      if (++produced_ > limit_) throw GuardExceeded("tiling enumeration guard exceeded");
      if (!(*fn_)(partner_)) stop_ = true;
      return;
    }
    for (int j : g_.nb[cursor]) {
      if (j < 0 || partner_[static_cast<size_t>(j)] >= 0) continue;
      partner_[cursor] = j;
      partner_[static_cast<size_t>(j)] = static_cast<int>(cursor);
      recurse(cursor + 1);
      partner_[cursor] = -1;
      partner_[static_cast<size_t>(j)] = -1;
      if (stop_) return;
    }
  }

  void collect(size_t cursor, int depth,
               std::vector<std::pair<std::vector<int>, size_t>>& out) {
    while (cursor < partner_.size() && partner_[cursor] >= 0) ++cursor;
    if (depth == 0 || cursor == partner_.size()) {
      out.emplace_back(partner_, cursor);
      return;
    }
    for (int j : g_.nb[cursor]) {
      if (j < 0 || partner_[static_cast<size_t>(j)] >= 0) continue;
      partner_[cursor] = j;
      partner_[static_cast<size_t>(j)] = static_cast<int>(cursor);
      collect(cursor + 1, depth - 1, out);
      partner_[cursor] = -1;
      partner_[static_cast<size_t>(j)] = -1;
    }
  }

  const RegionGraph& g_;
  std::vector<int> partner_;  // -1 while uncovered
  std::uint64_t limit_;
  std::uint64_t produced_ = 0;
  size_t start_ = 0;
  bool stop_ = false;
  const std::function<bool(const std::vector<int>&)>* fn_ = nullptr;
};

}  // namespace detail

// Visits every rhombus tiling in a deterministic order.
inline void for_each_tiling(const TriRegion& region,
                            const std::function<void(const Tiling&)>& fn,
                            std::uint64_t guard = kTilingGuard) {
  const detail::RegionGraph g(region);
  if (region.count(Orient::kUp) != region.count(Orient::kDown)) return;
  detail::TilingSearch search(g, guard);
  search.run([&](const std::vector<int>& partner) {
    fn(g.to_tiling(partner));
    return true;
  });
}

inline std::vector<Tiling> enumerate_tilings(const TriRegion& region,
                                             std::uint64_t guard = kTilingGuard) {
  std::vector<Tiling> out;
  for_each_tiling(region, [&](const Tiling& t) { out.push_back(t); }, guard);
  return out;
}

// Number of rhombus tilings. With threads > 1 the search tree is split a few
// levels down and the subtrees are counted independently.
inline ExactInt count_tilings(const TriRegion& region, int threads = 1,
                              std::uint64_t guard = kTilingGuard) {
  if (region.count(Orient::kUp) != region.count(Orient::kDown)) return 0;
  const detail::RegionGraph g(region);
  auto counter = [&](detail::TilingSearch& s) {
    std::uint64_t n = 0;
    s.run([&](const std::vector<int>&) {
      ++n;
      return true;
    });
    return n;
  };
  if (threads <= 1) {
    detail::TilingSearch s(g, guard);
    return ExactInt(static_cast<unsigned long>(counter(s)));
  }
  detail::TilingSearch root(g, guard);
  const auto front = root.frontier(8);
  std::vector<std::uint64_t> partial(front.size(), 0);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const size_t workers = static_cast<size_t>(threads);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t i = w; i < front.size(); i += workers) {
          detail::TilingSearch s(g, guard);
          s.seed(front[i].first, front[i].second);
          partial[i] = counter(s);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  ExactInt total = 0;
  for (auto v : partial) total += static_cast<unsigned long>(v);
  return total;
}

// Six triangles around lattice point (x, y) in counter-clockwise order.
inline std::array<Tri, 6> hexagon_around(int x, int y) {
  return {{{x, y, Orient::kUp},
           {x - 1, y, Orient::kDown},
           {x - 1, y, Orient::kUp},
           {x - 1, y - 1, Orient::kDown},
           {x, y - 1, Orient::kUp},
           {x, y - 1, Orient::kDown}}};
}

// All tilings reachable from t by rotating the three rhombi inside one unit
// hexagon.
inline std::vector<Tiling> flips(const Tiling& t) {
  std::map<Tri, Tri> partner;
  std::vector<LatticePoint> centres;
  for (const Rhombus& r : t) {
    partner[r.up] = r.down;
    partner[r.down] = r.up;
    for (auto p : tri_corners(r.up)) centres.push_back(p);
  }
  std::sort(centres.begin(), centres.end());
  centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
  std::vector<Tiling> out;
  for (auto c : centres) {
    const auto hex = hexagon_around(c.x, c.y);
    int parity = -1;
    bool ok = true;
    for (int k = 0; k < 6 && ok; ++k) {
      auto it = partner.find(hex[static_cast<size_t>(k)]);
      if (it == partner.end()) { ok = false; break; }
      int match = -1;
      if (it->second == hex[static_cast<size_t>((k + 1) % 6)]) match = k % 2;
      else if (it->second == hex[static_cast<size_t>((k + 5) % 6)]) match = (k + 1) % 2;
      if (match < 0 || (parity >= 0 && parity != match)) ok = false;
      parity = match;
    }
    if (!ok) continue;
    Tiling next;
    for (const Rhombus& r : t) {
      if (std::find(hex.begin(), hex.end(), r.up) == hex.end()) next.push_back(r);
    }
    // parity 0 pairs (0,1),(2,3),(4,5); the flip pairs (1,2),(3,4),(5,0).
    const int shift = parity == 0 ? 1 : 0;
    for (int k = 0; k < 6; k += 2) {
      const Tri a = hex[static_cast<size_t>((k + shift) % 6)];
      const Tri b = hex[static_cast<size_t>((k + shift + 1) % 6)];
      next.push_back(a.o == Orient::kUp ? Rhombus{a, b} : Rhombus{b, a});
    }
    std::sort(next.begin(), next.end());
    out.push_back(std::move(next));
  }
  return out;
}

struct FlipGraphReport {
  std::size_t tilings = 0;
  std::size_t edges = 0;
  std::size_t reached = 0;
  bool connected() const { return reached == tilings; }
};

inline FlipGraphReport flip_graph(const TriRegion& region,
                                  std::uint64_t guard = 100'000) {
  std::vector<Tiling> all = enumerate_tilings(region, guard);
  std::sort(all.begin(), all.end());
  FlipGraphReport rep;
  rep.tilings = all.size();
  if (all.empty()) return rep;
  std::vector<char> seen(all.size(), 0);
  std::deque<size_t> queue{0};
  seen[0] = 1;
  std::size_t degree_sum = 0;
  while (!queue.empty()) {
    const size_t i = queue.front();
    queue.pop_front();
    ++rep.reached;
    for (const Tiling& nb : flips(all[i])) {
      ++degree_sum;
      auto it = std::lower_bound(all.begin(), all.end(), nb);
      if (it == all.end() || *it != nb) throw InternalError("flip left the tiling set");
      const size_t j = static_cast<size_t>(it - all.begin());
      if (!seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  rep.edges = degree_sum / 2;
  return rep;
}

inline bool flip_connected(const TriRegion& region, std::uint64_t guard = 100'000) {
  return flip_graph(region, guard).connected();
}

}  // namespace fplcount
