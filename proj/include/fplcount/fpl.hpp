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

// Fully packed loop configurations on the square grid Q_n with periodic
// boundary conditions.
//
// Q_n has n*n vertices (row, col), 0-based, row 0 on top. Every vertex has
// four potential edges; on the border some of them are external links. The
// 4n external links are labelled 1..4n clockwise, label 1 being the left-most
// link on the top side. A configuration occupies exactly one parity class
// of external links and every vertex has degree two.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fplcount/exact.hpp"

namespace fplcount {

inline constexpr int kMaxEnumerationN = 7;

enum class Parity { kEven = 0, kOdd = 1 };

inline Parity parity_of_label(int label) {
  return (label % 2 == 0) ? Parity::kEven : Parity::kOdd;
}

inline Parity flip(Parity p) {
  return p == Parity::kEven ? Parity::kOdd : Parity::kEven;
}

inline const char* to_string(Parity p) {
  return p == Parity::kEven ? "even" : "odd";
}

enum class Dir { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

struct Vertex {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Where an external link attaches: its border vertex and outward direction.
struct LinkSite {
  Vertex vertex;
  Dir dir = Dir::kNorth;
};

// Edge ids. Horizontal edge (row, j) joins (row, j-1) and (row, j) for
// j in [0, n]; j = 0 and j = n are the left and right external links.
// Vertical edge (i, col) joins (i-1, col) and (i, col) for i in [0, n];
// i = 0 and i = n are the top and bottom external links.
class Grid {
 public:
  explicit Grid(int n) : n_(n) {
    if (n < 1) throw DomainError("grid size must be positive");
  }

  int n() const { return n_; }
  int num_edges() const { return 2 * n_ * (n_ + 1); }
  int num_labels() const { return 4 * n_; }

  int horizontal(int row, int j) const { return row * (n_ + 1) + j; }
  int vertical(int i, int col) const { return n_ * (n_ + 1) + i * n_ + col; }
  bool is_horizontal(int edge) const { return edge < n_ * (n_ + 1); }

  // Edge leaving `v` in direction `d`.
  int edge_at(Vertex v, Dir d) const {
    switch (d) {
      case Dir::kNorth: return vertical(v.row, v.col);
      case Dir::kSouth: return vertical(v.row + 1, v.col);
      case Dir::kWest: return horizontal(v.row, v.col);
      case Dir::kEast: return horizontal(v.row, v.col + 1);
    }
    return -1;
  }

  // Endpoints of an edge; an external link has one endpoint outside the
  // grid (row or col equal to -1 or n).
  std::pair<Vertex, Vertex> endpoints(int edge) const {
    if (is_horizontal(edge)) {
      const int row = edge / (n_ + 1);
      const int j = edge % (n_ + 1);
      return {{row, j - 1}, {row, j}};
    }
    const int e = edge - n_ * (n_ + 1);
    const int i = e / n_;
    const int col = e % n_;
    return {{i - 1, col}, {i, col}};
  }

  bool inside(Vertex v) const {
    return v.row >= 0 && v.row < n_ && v.col >= 0 && v.col < n_;
  }

  bool is_external(int edge) const {
    auto [a, b] = endpoints(edge);
    return !inside(a) || !inside(b);
  }

  // Labels are canonical in [1, 4n].
  int normalize(long label) const {
    const long m = 4L * n_;
    long r = ((label - 1) % m + m) % m;
    return static_cast<int>(r + 1);
  }

  // Representative of a label in [-2n+1, 2n].
  int ln(long label) const {
    int l = normalize(label);
    return l > 2 * n_ ? l - 4 * n_ : l;
  }

  LinkSite site(long label) const {
    const int l = normalize(label);
    if (l <= n_) return {{0, l - 1}, Dir::kNorth};
    if (l <= 2 * n_) return {{l - n_ - 1, n_ - 1}, Dir::kEast};
    if (l <= 3 * n_) return {{n_ - 1, 3 * n_ - l}, Dir::kSouth};
    return {{4 * n_ - l, 0}, Dir::kWest};
  }

  int link_edge(long label) const {
    const LinkSite s = site(label);
    return edge_at(s.vertex, s.dir);
  }

  // Inverse of link_edge; returns 0 for internal edges.
  int label_of_edge(int edge) const {
    if (is_horizontal(edge)) {
      const int row = edge / (n_ + 1);
      const int j = edge % (n_ + 1);
      if (j == 0) return 4 * n_ - row;
      if (j == n_) return n_ + 1 + row;
      return 0;
    }
    const int e = edge - n_ * (n_ + 1);
    const int i = e / n_;
    const int col = e % n_;
    if (i == 0) return col + 1;
    if (i == n_) return 3 * n_ - col;
    return 0;
  }

  std::array<int, 4> incident(Vertex v) const {
    return {edge_at(v, Dir::kNorth), edge_at(v, Dir::kEast),
            edge_at(v, Dir::kSouth), edge_at(v, Dir::kWest)};
  }

  // The endpoint of `edge` other than `v`.
  Vertex across(int edge, Vertex v) const {
    auto [a, b] = endpoints(edge);
    return a == v ? b : a;
  }

 private:
  int n_;
};

// A subset of the edges of Q_n (internal edges plus external links).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n) : n_(n), bits_(Grid(n).num_edges(), 0) {}

  int n() const { return n_; }
  Grid grid() const { return Grid(n_); }
  bool contains(int edge) const { return bits_[edge] != 0; }
  void set(int edge, bool on = true) { bits_[edge] = on ? 1 : 0; }
  void toggle(int edge) { bits_[edge] ^= 1; }
  int size() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
  }
  std::vector<int> edges() const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(bits_.size()); ++e) {
      if (bits_[e]) out.push_back(e);
    }
    return out;
  }
  bool subset_of(const EdgeSet& other) const {
    for (size_t e = 0; e < bits_.size(); ++e) {
      if (bits_[e] && !other.bits_[e]) return false;
    }
    return true;
  }
  EdgeSet& intersect_with(const EdgeSet& other) {
    for (size_t e = 0; e < bits_.size(); ++e) bits_[e] &= other.bits_[e];
    return *this;
  }
  EdgeSet& unite_with(const EdgeSet& other) {
    for (size_t e = 0; e < bits_.size(); ++e) bits_[e] |= other.bits_[e];
    return *this;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline int degree(const EdgeSet& s, Vertex v) {
  int d = 0;
  for (int e : s.grid().incident(v)) d += s.contains(e) ? 1 : 0;
  return d;
}

// An edge set in which every vertex has degree exactly two and the occupied
// external links form one parity class. Only produced by the enumerator or
// by validated construction.
class FplConfig {
 public:
  FplConfig() = default;

  static FplConfig from_edges(EdgeSet edges) {
    FplConfig c;
    c.edges_ = std::move(edges);
    c.validate();
    return c;
  }

  int n() const { return edges_.n(); }
  const EdgeSet& edges() const { return edges_; }
  bool occupied(int edge) const { return edges_.contains(edge); }

  Parity parity() const {
    return edges_.contains(Grid(n()).link_edge(1)) ? Parity::kOdd
                                                   : Parity::kEven;
  }

  // Throws DomainError unless the degree and parity invariants hold.
  void validate() const {
    const Grid g(n());
    for (int r = 0; r < n(); ++r) {
      for (int c = 0; c < n(); ++c) {
        if (degree(edges_, {r, c}) != 2) {
          throw DomainError("vertex (" + std::to_string(r) + "," +
                            std::to_string(c) + ") does not have degree 2");
        }
      }
    }
    const bool odd = edges_.contains(g.link_edge(1));
    for (int l = 1; l <= g.num_labels(); ++l) {
      const bool want = (l % 2 == 1) == odd;
      if (edges_.contains(g.link_edge(l)) != want) {
        throw DomainError("external links are not one parity class");
      }
    }
  }

  friend bool operator==(const FplConfig&, const FplConfig&) = default;
  friend auto operator<=>(const FplConfig&, const FplConfig&) = default;

 private:
  friend class FplEnumerator;
  EdgeSet edges_;
};

// A non-crossing perfect matching on the 2n occupied link labels of Q_n.
// Pairs are stored (a, b) with a < b, sorted by a.
struct LinkPattern {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
  friend auto operator<=>(const LinkPattern&, const LinkPattern&) = default;
};

inline LinkPattern make_pattern(int n, std::vector<std::pair<int, int>> pairs) {
  const Grid g(n);
  for (auto& [a, b] : pairs) {
    a = g.normalize(a);
    b = g.normalize(b);
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  return LinkPattern{n, std::move(pairs)};
}

inline bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool is_noncrossing(const LinkPattern& m) {
  for (size_t i = 0; i < m.pairs.size(); ++i) {
    for (size_t j = i + 1; j < m.pairs.size(); ++j) {
      if (chords_cross(m.pairs[i], m.pairs[j])) return false;
    }
  }
  return true;
}

// The parity class used by a pattern, or nullopt when the labels are not a
// complete parity class (wrong count, mixed parity or repeated labels).
inline std::optional<Parity> pattern_parity(const LinkPattern& m) {
  const Grid g(m.n);
  if (static_cast<int>(m.pairs.size()) != m.n) return std::nullopt;
  std::vector<int> seen(g.num_labels() + 1, 0);
  for (auto [a, b] : m.pairs) {
    if (a < 1 || b > g.num_labels() || a == b) return std::nullopt;
    ++seen[a];
    ++seen[b];
  }
  const Parity p = parity_of_label(m.pairs.front().first);
  for (int l = 1; l <= g.num_labels(); ++l) {
    const int want = parity_of_label(l) == p ? 1 : 0;
    if (seen[l] != want) return std::nullopt;
  }
  return p;
}

// Throws DomainError unless `m` is a non-crossing perfect matching of one
// parity class.
inline Parity validate_pattern(const LinkPattern& m) {
  auto p = pattern_parity(m);
  if (!p) throw DomainError("pattern does not match one parity class");
  if (!is_noncrossing(m)) throw DomainError("pattern has crossing chords");
  return *p;
}

// Labels i, j matched in M become i+1, j+1 matched in the rotation.
inline LinkPattern rotate_pattern(const LinkPattern& m, int steps = 1) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m.pairs.size());
  for (auto [a, b] : m.pairs) pairs.emplace_back(a + steps, b + steps);
  return make_pattern(m.n, std::move(pairs));
}

// Follows each loop from its external links and pairs up the ends.
inline LinkPattern trace_matching(const FplConfig& c) {
  const int n = c.n();
  const Grid g(n);
  const EdgeSet& s = c.edges();
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      if (degree(s, {r, col}) != 2) {
        throw DomainError("malformed configuration: degree violation");
      }
    }
  }
  std::vector<int> partner(g.num_labels() + 1, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int l = 1; l <= g.num_labels(); ++l) {
    const int start = g.link_edge(l);
    if (!s.contains(start) || partner[l] != 0) continue;
    Vertex v = g.site(l).vertex;
    int came = start;
    int guard = g.num_edges() + 1;
    while (true) {
      if (--guard < 0) throw DomainError("malformed configuration: no exit");
      int next = -1;
      for (int e : g.incident(v)) {
        if (e != came && s.contains(e)) next = e;
      }
      const int exit_label = g.label_of_edge(next);
      if (exit_label != 0 && g.is_external(next)) {
        partner[l] = exit_label;
        partner[exit_label] = l;
        pairs.emplace_back(l, exit_label);
        break;
      }
      v = g.across(next, v);
      came = next;
    }
  }
  return make_pattern(n, std::move(pairs));
}

// Backtracking enumeration of all configurations of a given parity, driven
// by an explicit work stack so that it can be suspended, resumed and split.
// Vertices are visited in row-major order; at each vertex the choice is
// which of its east and south edges to occupy.
class FplEnumerator {
 public:
  FplEnumerator(int n, Parity parity, int max_n = kMaxEnumerationN)
      : grid_(n), parity_(parity), edges_(n) {
    if (n > max_n) {
      throw GuardExceeded("FPL enumeration guard: n=" + std::to_string(n) +
                          " exceeds " + std::to_string(max_n));
    }
    for (int l = 1; l <= grid_.num_labels(); ++l) {
      if (parity_of_label(l) == parity_) edges_.set(grid_.link_edge(l));
    }
    stack_.push_back(Frame{0, 0});
  }

  // Next configuration in deterministic order, or nullopt when exhausted.
  std::optional<FplConfig> next() {
    const int total = grid_.n() * grid_.n();
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.vertex == total) {
        stack_.pop_back();
        FplConfig c;
        c.edges_ = edges_;
        return c;
      }
      if (!advance(f)) {
        stack_.pop_back();
        continue;
      }
      stack_.push_back(Frame{f.vertex + 1, 0});
    }
    return std::nullopt;
  }

  // Splits the remaining search space into independent enumerators by
  // expanding the first `depth` vertices. The concatenation of the parts,
  // in order, yields the same sequence as this enumerator would.
  std::vector<FplEnumerator> split(int depth) const {
    std::vector<FplEnumerator> parts;
    FplEnumerator probe = *this;
    probe.collect_prefixes(depth, parts);
    return parts;
  }

  template <typename Fn>
  void for_each(Fn&& fn) {
    while (auto c = next()) fn(*c);
  }

 private:
  struct Frame {
    int vertex;
    int option;  // next option index to try at this vertex
  };

  // Options at a vertex: bit 0 = east occupied, bit 1 = south occupied.
  bool advance(Frame& f) {
    const int n = grid_.n();
    const Vertex v{f.vertex / n, f.vertex % n};
    const int east = grid_.edge_at(v, Dir::kEast);
    const int south = grid_.edge_at(v, Dir::kSouth);
    const bool east_fixed = v.col == n - 1;
    const bool south_fixed = v.row == n - 1;
    const int have = (edges_.contains(grid_.edge_at(v, Dir::kNorth)) ? 1 : 0) +
                     (edges_.contains(grid_.edge_at(v, Dir::kWest)) ? 1 : 0);
    // Clear any previous choice before trying the next one.
    if (!east_fixed) edges_.set(east, false);
    if (!south_fixed) edges_.set(south, false);
    while (f.option < 4) {
      const int opt = f.option++;
      const bool e = opt & 1;
      const bool s = opt & 2;
      if (east_fixed && e != edges_.contains(east)) continue;
      if (south_fixed && s != edges_.contains(south)) continue;
      if (have + (e ? 1 : 0) + (s ? 1 : 0) != 2) continue;
      if (!east_fixed) edges_.set(east, e);
      if (!south_fixed) edges_.set(south, s);
      return true;
    }
    return false;
  }

  void collect_prefixes(int depth, std::vector<FplEnumerator>& out) {
    if (stack_.empty()) return;
    const int total = grid_.n() * grid_.n();
    if (stack_.back().vertex >= std::min(depth, total)) {
      out.push_back(*this);
      return;
    }
    while (true) {
      Frame& f = stack_.back();
      if (!advance(f)) break;
      FplEnumerator child = *this;
      // The child owns only this branch: lock every prefix frame.
      for (Frame& pf : child.stack_) pf.option = 4;
      child.stack_.push_back(Frame{f.vertex + 1, 0});
      child.collect_prefixes(depth, out);
    }
  }

  Grid grid_;
  Parity parity_;
  EdgeSet edges_;
  std::vector<Frame> stack_;
};

// Counts of configurations per traced matching, for one parity class.
using MatchingCensus = std::map<LinkPattern, ExactInt>;

// Runs `fn` on every configuration. With threads > 1 the search tree is
// split and the configurations are delivered from worker threads; `fn` must
// then be safe to call concurrently and arrival order is unspecified.
template <typename Fn>
void for_each_fpl(int n, Parity parity, Fn&& fn, int threads = 1,
                  int max_n = kMaxEnumerationN) {
  FplEnumerator root(n, parity, max_n);
  if (threads <= 1) {
    root.for_each(fn);
    return;
  }
  auto parts = root.split(std::min(n * n, 2 * n));
  std::vector<std::thread> pool;
  const size_t workers = static_cast<size_t>(threads);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < parts.size(); i += workers) parts[i].for_each(fn);
    });
  }
  for (auto& t : pool) t.join();
}

inline MatchingCensus matching_census(int n, Parity parity, int threads = 1,
                                      int max_n = kMaxEnumerationN) {
  if (threads <= 1) {
    MatchingCensus census;
    for_each_fpl(n, parity, [&](const FplConfig& c) {
      ++census[trace_matching(c)];
    }, 1, max_n);
    return census;
  }
  FplEnumerator root(n, parity, max_n);
  auto parts = root.split(std::min(n * n, 2 * n));
  std::vector<MatchingCensus> partial(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = static_cast<size_t>(w); i < parts.size();
           i += static_cast<size_t>(threads)) {
        parts[i].for_each([&](const FplConfig& c) {
          ++partial[static_cast<size_t>(w)][trace_matching(c)];
        });
      }
    });
  }
  for (auto& t : pool) t.join();
  MatchingCensus census;
  for (auto& m : partial) {
    for (auto& [k, v] : m) census[k] += v;
  }
  return census;
}

inline ExactInt count_fpl(int n, Parity parity, int max_n = kMaxEnumerationN) {
  ExactInt total = 0;
  for_each_fpl(n, parity, [&](const FplConfig&) { ++total; }, 1, max_n);
  return total;
}

// Number of configurations whose traced matching equals the placed pattern.
inline ExactInt fpl_count(const LinkPattern& pattern,
                          int max_n = kMaxEnumerationN) {
  const Parity parity = validate_pattern(pattern);
  ExactInt total = 0;
  for_each_fpl(pattern.n, parity, [&](const FplConfig& c) {
    if (trace_matching(c) == pattern) ++total;
  }, 1, max_n);
  return total;
}

// All configurations with the given placed matching.
inline std::vector<FplConfig> configurations_with(
    const LinkPattern& pattern, int max_n = kMaxEnumerationN) {
  const Parity parity = validate_pattern(pattern);
  std::vector<FplConfig> out;
  for_each_fpl(pattern.n, parity, [&](const FplConfig& c) {
    if (trace_matching(c) == pattern) out.push_back(c);
  }, 1, max_n);
  return out;
}

// All non-crossing perfect matchings of one parity class of Q_n, in
// lexicographic order.
inline std::vector<LinkPattern> all_patterns(int n, Parity parity) {
  const Grid g(n);
  std::vector<int> labels;
  for (int l = 1; l <= g.num_labels(); ++l) {
    if (parity_of_label(l) == parity) labels.push_back(l);
  }
  std::vector<LinkPattern> out;
  std::vector<std::pair<int, int>> pairs;
  // Non-crossing matchings of a sequence: the first point pairs with a
  // point at odd distance, splitting the rest into inside and outside.
  std::function<void(std::vector<int>, std::vector<std::vector<int>>)> rec;
  rec = [&](std::vector<int> seq, std::vector<std::vector<int>> pending) {
    if (seq.empty()) {
      if (pending.empty()) {
        out.push_back(make_pattern(n, pairs));
        return;
      }
      auto next = pending.back();
      pending.pop_back();
      rec(std::move(next), std::move(pending));
      return;
    }
    for (size_t k = 1; k < seq.size(); k += 2) {
      pairs.emplace_back(seq[0], seq[k]);
      std::vector<int> inner(seq.begin() + 1, seq.begin() + k);
      std::vector<int> outer(seq.begin() + k + 1, seq.end());
      auto p2 = pending;
      p2.push_back(std::move(outer));
      rec(std::move(inner), std::move(p2));
      pairs.pop_back();
    }
  };
  rec(labels, {});
  std::sort(out.begin(), out.end());
  return out;
}

struct WielandViolation {
  LinkPattern pattern;
  ExactInt count;
  ExactInt rotated_count;
};

struct WielandReport {
  int n = 0;
  int matchings_checked = 0;  // per parity class
  ExactInt total_even = 0;
  ExactInt total_odd = 0;
  std::vector<WielandViolation> violations;
  bool pass() const { return violations.empty(); }
};

// Checks FPL(M) = FPL(rotated M) for every matching of both parity classes.
inline WielandReport wieland_check(int n, int max_n = 6, int threads = 1) {
  if (n > max_n) {
    throw GuardExceeded("wieland_check guard: n=" + std::to_string(n) +
                        " exceeds " + std::to_string(max_n));
  }
  WielandReport rep;
  rep.n = n;
  const MatchingCensus even = matching_census(n, Parity::kEven, threads, max_n);
  const MatchingCensus odd = matching_census(n, Parity::kOdd, threads, max_n);
  auto lookup = [](const MatchingCensus& c, const LinkPattern& m) {
    auto it = c.find(m);
    return it == c.end() ? ExactInt(0) : it->second;
  };
  for (Parity parity : {Parity::kEven, Parity::kOdd}) {
    const MatchingCensus& own = parity == Parity::kEven ? even : odd;
    const MatchingCensus& other = parity == Parity::kEven ? odd : even;
    const auto patterns = all_patterns(n, parity);
    rep.matchings_checked = static_cast<int>(patterns.size());
    for (const auto& m : patterns) {
      const ExactInt a = lookup(own, m);
      const ExactInt b = lookup(other, rotate_pattern(m));
      if (a != b) rep.violations.push_back({m, a, b});
    }
    ExactInt total = 0;
    for (auto& [k, v] : own) total += v;
    (parity == Parity::kEven ? rep.total_even : rep.total_odd) = total;
  }
  return rep;
}

// A 1x2 block of faces. The move applies when the shared middle edge is
// occupied and the six boundary edges alternate; it swaps the occupied and
// empty boundary edges, which keeps every degree and the matching.
struct DominoCell {
  int row = 0;  // top-left vertex of the block
  int col = 0;
  bool horizontal = true;  // two faces side by side, else stacked
  friend auto operator<=>(const DominoCell&, const DominoCell&) = default;
};

// Boundary cycle of the block in cyclic order, followed by the middle edge.
inline std::pair<std::array<int, 6>, int> domino_edges(const Grid& g,
                                                       DominoCell cell) {
  const int r = cell.row;
  const int c = cell.col;
  if (cell.horizontal) {
    // Vertices: (r,c) (r,c+1) (r,c+2) / (r+1,c) (r+1,c+1) (r+1,c+2)
    std::array<int, 6> cycle = {
        g.horizontal(r, c + 1),     g.horizontal(r, c + 2),
        g.vertical(r + 1, c + 2),   g.horizontal(r + 1, c + 2),
        g.horizontal(r + 1, c + 1), g.vertical(r + 1, c)};
    return {cycle, g.vertical(r + 1, c + 1)};
  }
  std::array<int, 6> cycle = {
      g.horizontal(r, c + 1),     g.vertical(r + 1, c + 1),
      g.vertical(r + 2, c + 1),   g.horizontal(r + 2, c + 1),
      g.vertical(r + 2, c),       g.vertical(r + 1, c)};
  return {cycle, g.horizontal(r + 1, c + 1)};
}

inline bool local_move_applies(const FplConfig& c, DominoCell cell) {
  const int n = c.n();
  const int rows = cell.horizontal ? 1 : 2;
  const int cols = cell.horizontal ? 2 : 1;
  if (cell.row < 0 || cell.col < 0 || cell.row + rows >= n ||
      cell.col + cols >= n) {
    return false;
  }
  auto [cycle, middle] = domino_edges(Grid(n), cell);
  if (!c.occupied(middle)) return false;
  for (int i = 0; i < 6; ++i) {
    if (c.occupied(cycle[i]) == c.occupied(cycle[(i + 1) % 6])) return false;
  }
  return true;
}

inline FplConfig fpl_local_move(const FplConfig& c, DominoCell cell) {
  if (!local_move_applies(c, cell)) {
    throw DomainError("local move does not apply at this cell");
  }
  auto [cycle, middle] = domino_edges(Grid(c.n()), cell);
  EdgeSet s = c.edges();
  for (int e : cycle) s.toggle(e);
  return FplConfig::from_edges(std::move(s));
}

inline std::vector<DominoCell> local_move_cells(const FplConfig& c) {
  std::vector<DominoCell> out;
  for (int r = 0; r < c.n(); ++r) {
    for (int col = 0; col < c.n(); ++col) {
      for (bool h : {true, false}) {
        DominoCell cell{r, col, h};
        if (local_move_applies(c, cell)) out.push_back(cell);
      }
    }
  }
  return out;
}

}  // namespace fplcount
