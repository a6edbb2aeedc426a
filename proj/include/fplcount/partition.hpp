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

// Partitions, semistandard Young tableaux and families of non-intersecting
// lattice paths. Cells are addressed 1-based as (row i, column j).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fplcount/exact.hpp"

namespace fplcount {

inline constexpr std::uint64_t kSsytGuard = 10'000'000;

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1]) {
        throw DomainError("partition parts must be weakly decreasing");
      }
    }
  }

  bool empty() const { return parts.empty(); }
  int length() const { return static_cast<int>(parts.size()); }
  int first() const { return parts.empty() ? 0 : parts.front(); }
  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  // 1-based part, 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
  bool contains(int i, int j) const { return j >= 1 && part(i) >= j; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<size_t>(lambda.first()), 0);
  for (int part : lambda.parts) {
    for (int j = 0; j < part; ++j) ++out[static_cast<size_t>(j)];
  }
  return Partition(std::move(out));
}

struct ContentHook {
  int content;
  int hook;
};

inline ContentHook content_hook(const Partition& lambda, int i, int j) {
  if (i < 1 || !lambda.contains(i, j)) throw DomainError("cell outside diagram");
  const Partition conj = conjugate(lambda);
  return {j - i, lambda.part(i) + conj.part(j) - i - j + 1};
}

// Run lengths (h1, v1, ..., hk, vk) of the bottom-right border, read from the
// bottom-left corner: h1 is the smallest part, v1 its multiplicity, h2 the
// next jump in part size, and so on.
struct BorderProfile {
  std::vector<int> runs;

  int k() const { return static_cast<int>(runs.size() / 2); }
  int h(int i) const { return runs[static_cast<size_t>(2 * (i - 1))]; }
  int v(int i) const { return runs[static_cast<size_t>(2 * (i - 1) + 1)]; }

  friend bool operator==(const BorderProfile&, const BorderProfile&) = default;
};

inline BorderProfile border_profile(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("border profile of empty partition");
  BorderProfile bp;
  int prev = 0;
  for (int i = lambda.length(); i >= 1;) {
    const int value = lambda.part(i);
    int mult = 0;
    while (i >= 1 && lambda.part(i) == value) {
      ++mult;
      --i;
    }
    bp.runs.push_back(value - prev);
    bp.runs.push_back(mult);
    prev = value;
  }
  return bp;
}

inline Partition reconstruct(const BorderProfile& bp) {
  if (bp.runs.empty() || bp.runs.size() % 2 != 0) {
    throw DomainError("profile needs an even, positive number of runs");
  }
  std::vector<int> reversed;
  int value = 0;
  for (int i = 1; i <= bp.k(); ++i) {
    if (bp.h(i) < 1 || bp.v(i) < 1) throw DomainError("profile runs must be positive");
    value += bp.h(i);
    for (int t = 0; t < bp.v(i); ++t) reversed.push_back(value);
  }
  std::reverse(reversed.begin(), reversed.end());
  return Partition(std::move(reversed));
}

inline ExactInt hook_content_count(const Partition& lambda, long n) {
  if (n < 1) throw DomainError("hook_content_count: n >= 1 required");
  const Partition conj = conjugate(lambda);
  ExactInt num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= (j - i) + n;
      den *= lambda.part(i) + conj.part(j) - i - j + 1;
    }
  }
  if (num <= 0) return 0;
  return require_integer(make_rat(num, den), "hook_content_count");
}

struct Ssyt {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int at(int i, int j) const {
    return rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  bool valid(int max_entry) const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (int i = 1; i <= shape.length(); ++i) {
      if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != shape.part(i)) {
        return false;
      }
      for (int j = 1; j <= shape.part(i); ++j) {
        const int e = at(i, j);
        if (e < 1 || e > max_entry) return false;
        if (j > 1 && at(i, j - 1) > e) return false;
        if (i > 1 && at(i - 1, j) >= e) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Ssyt&, const Ssyt&) = default;
  friend auto operator<=>(const Ssyt&, const Ssyt&) = default;
};

// Visits every SSYT of the given shape with entries in 1..n, filling cells in
// row-major order. Throws GuardExceeded once more than `guard` tableaux have
// been produced.
inline void for_each_ssyt(const Partition& lambda, int n,
                          const std::function<void(const Ssyt&)>& fn,
                          std::uint64_t guard = kSsytGuard) {
  if (n < 1) throw DomainError("for_each_ssyt: n >= 1 required");
  Ssyt t{lambda, {}};
  for (int part : lambda.parts) t.rows.emplace_back(static_cast<size_t>(part), 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
  }
  std::uint64_t produced = 0;
  std::function<void(size_t)> fill = [&](size_t idx) {
    if (idx == cells.size()) {
      if (++produced > guard) throw GuardExceeded("SSYT enumeration guard exceeded");
      fn(t);
      return;
    }
    const auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 1) lo = std::max(lo, t.at(i, j - 1));
    if (i > 1) lo = std::max(lo, t.at(i - 1, j) + 1);
    // Leave room for the strictly increasing column below.
    int depth = 0;
    for (int ii = i + 1; ii <= lambda.length() && lambda.part(ii) >= j; ++ii) ++depth;
    const int hi = n - depth;
    for (int e = lo; e <= hi; ++e) {
      t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e;
      fill(idx + 1);
    }
  };
  fill(0);
}

inline std::vector<Ssyt> enumerate_ssyt(const Partition& lambda, int n,
                                        std::uint64_t guard = kSsytGuard) {
  std::vector<Ssyt> out;
  for_each_ssyt(lambda, n, [&](const Ssyt& t) { out.push_back(t); }, guard);
  return out;
}

// Lattice paths with unit east (+1, 0) and south (0, -1) steps.
enum class Step : std::uint8_t { kEast, kSouth };

struct LatticePath {
  int start_x = 0, start_y = 0;
  std::vector<Step> steps;

  std::vector<std::pair<int, int>> points() const {
    std::vector<std::pair<int, int>> pts{{start_x, start_y}};
    int x = start_x, y = start_y;
    for (Step s : steps) {
      if (s == Step::kEast) ++x; else --y;
      pts.emplace_back(x, y);
    }
    return pts;
  }
  std::pair<int, int> end() const { return points().back(); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

// Path i (1-based) runs from (i - lambda'_i, lambda'_1 - lambda'_i + i + r)
// to (i, i).
struct PathFamily {
  Partition shape;
  int r = 0;
  std::vector<LatticePath> paths;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
  friend auto operator<=>(const PathFamily&, const PathFamily&) = default;
};

inline std::pair<int, int> family_start(const Partition& conj, int i, int r) {
  return {i - conj.part(i), conj.part(1) - conj.part(i) + i + r};
}

// Checks endpoints and pairwise disjointness, sweeping lattice points by
// their y-coordinate.
inline void validate_family(const PathFamily& fam) {
  const Partition conj = conjugate(fam.shape);
  if (static_cast<int>(fam.paths.size()) != fam.shape.first()) {
    throw DomainError("path family has the wrong number of paths");
  }
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= fam.shape.first(); ++i) {
    const LatticePath& p = fam.paths[static_cast<size_t>(i - 1)];
    const auto start = family_start(conj, i, fam.r);
    if (std::make_pair(p.start_x, p.start_y) != start ||
        p.end() != std::make_pair(i, i)) {
      throw DomainError("path endpoints do not match the shape");
    }
    for (auto [x, y] : p.points()) all.emplace_back(y, x);
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw DomainError("paths intersect");
  }
}

// An east step from (x, y) carries label y - x. Path j's labels, read from
// its end back to its start, form column j.
inline Ssyt paths_to_ssyt(const PathFamily& fam) {
  validate_family(fam);
  Ssyt t{fam.shape, {}};
  for (int part : fam.shape.parts) t.rows.emplace_back(static_cast<size_t>(part), 0);
  const Partition conj = conjugate(fam.shape);
  for (int j = 1; j <= fam.shape.first(); ++j) {
    const LatticePath& p = fam.paths[static_cast<size_t>(j - 1)];
    std::vector<int> labels;
    int x = p.start_x, y = p.start_y;
    for (Step s : p.steps) {
      if (s == Step::kEast) {
        labels.push_back(y - x);
        ++x;
      } else {
        --y;
      }
    }
    std::reverse(labels.begin(), labels.end());
    if (static_cast<int>(labels.size()) != conj.part(j)) {
      throw InternalError("column length mismatch");
    }
    for (int i = 1; i <= conj.part(j); ++i) {
      t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          labels[static_cast<size_t>(i - 1)];
    }
  }
  return t;
}

inline PathFamily ssyt_to_paths(const Ssyt& t, int r) {
  const Partition conj = conjugate(t.shape);
  if (!t.valid(r + conj.part(1))) throw DomainError("tableau entries out of bounds");
  PathFamily fam{t.shape, r, {}};
  for (int j = 1; j <= t.shape.first(); ++j) {
    const auto [sx, sy] = family_start(conj, j, r);
    LatticePath p{sx, sy, {}};
    int x = sx, y = sy;
    // Labels along the path from start to end are column j read bottom-up.
    for (int i = conj.part(j); i >= 1; --i) {
      const int label = t.at(i, j);
      while (y - x > label) {
        p.steps.push_back(Step::kSouth);
        --y;
      }
      p.steps.push_back(Step::kEast);
      ++x;
    }
    while (y > j) {
      p.steps.push_back(Step::kSouth);
      --y;
    }
    fam.paths.push_back(std::move(p));
  }
  validate_family(fam);
  return fam;
}

inline ExactInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// Determinant of the matrix of path counts between the family's endpoints,
// by fraction-free Gaussian elimination.
inline ExactInt lgv_count(const Partition& lambda, int r) {
  if (r < 0) throw DomainError("lgv_count: r >= 0 required");
  const Partition conj = conjugate(lambda);
  const int m = lambda.first();
  if (m == 0) return 1;
  std::vector<std::vector<ExactInt>> a(static_cast<size_t>(m),
                                       std::vector<ExactInt>(static_cast<size_t>(m)));
  for (int i = 1; i <= m; ++i) {
    const auto [sx, sy] = family_start(conj, i, r);
    for (int j = 1; j <= m; ++j) {
      const long east = j - sx, south = sy - j;
      a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          (east < 0 || south < 0) ? ExactInt(0) : binomial(east + south, east);
    }
  }
  // Bareiss elimination.
  ExactInt sign = 1, prev = 1;
  for (int k = 0; k < m - 1; ++k) {
    const auto ku = static_cast<size_t>(k);
    if (a[ku][ku] == 0) {
      int swap = -1;
      for (int i = k + 1; i < m; ++i) {
        if (a[static_cast<size_t>(i)][ku] != 0) { swap = i; break; }
      }
      if (swap < 0) return 0;
      std::swap(a[ku], a[static_cast<size_t>(swap)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        const auto iu = static_cast<size_t>(i), ju = static_cast<size_t>(j);
        a[iu][ju] = (a[iu][ju] * a[ku][ku] - a[iu][ku] * a[ku][ju]) / prev;
      }
    }
    prev = a[ku][ku];
  }
  return sign * a[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)];
}

}  // namespace fplcount
