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

// Verification suites, the result cache and JSON reports.

#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fplcount/exact.hpp"
#include "fplcount/formulas.hpp"
#include "fplcount/fpl.hpp"
#include "fplcount/io.hpp"
#include "fplcount/isomorphism.hpp"
#include "fplcount/lattice.hpp"
#include "fplcount/partition.hpp"
#include "fplcount/reduction.hpp"
#include "fplcount/regions.hpp"

namespace fplcount {

inline constexpr const char* kEngineVersion = "fplcount-1.0";
inline constexpr const char* kCacheEnv = "FPLCOUNT_CACHE_DIR";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitSkip = 3 };

// Cache directory: explicit flag, then the environment, then the user cache.
inline std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "fplcount";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "fplcount";
  }
  return {};
}

// Append-only JSON-lines store of exact values. Entries written by another
// engine version are ignored.
class Cache {
 public:
  Cache() = default;
  explicit Cache(const std::filesystem::path& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DomainError("cannot create cache directory " + dir.string());
    file_ = dir / "cache.jsonl";
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      const Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("engine", "") != kEngineVersion) continue;
      if (!j.contains("key") || !j.contains("value")) continue;
      entries_[j["key"].get<std::string>()] = j["value"].get<std::string>();
    }
  }

  bool enabled() const { return !file_.empty(); }
  const std::filesystem::path& file() const { return file_; }
  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }

  static std::string key(const std::string& op, const Json& input) { return op + " " + input.dump(); }

  std::optional<std::string> get(const std::string& k) {
    std::lock_guard lock(mu_);
    auto it = entries_.find(k);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& k, const std::string& value) {
    std::lock_guard lock(mu_);
    if (!enabled() || entries_.count(k)) return;
    entries_[k] = value;
    const std::string line =
        Json{{"key", k}, {"value", value}, {"engine", kEngineVersion}}.dump() + "\n";
    const int fd = ::open(file_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) return;
    if (::flock(fd, LOCK_EX) == 0) {
      const ssize_t written = ::write(fd, line.data(), line.size());
      (void)written;
      ::flock(fd, LOCK_UN);
    }
    ::close(fd);
  }

  template <typename Fn>
  ExactInt exact(const std::string& op, const Json& input, Fn&& compute) {
    const std::string k = key(op, input);
    if (auto hit = get(k)) {
      ++hits_;
      return parse_exact_int(*hit);
    }
    ++misses_;
    ExactInt v = compute();
    put(k, to_decimal(v));
    return v;
  }

 private:
  std::filesystem::path file_;
  std::map<std::string, std::string> entries_;
  std::mutex mu_;
  std::atomic<size_t> hits_{0}, misses_{0};
};

enum class Status { kPass, kFail, kSkip };

inline const char* to_string(Status s) {
  return s == Status::kPass ? "pass" : s == Status::kFail ? "fail" : "skipped";
}

struct CheckRecord {
  std::string check;
  Json input;
  std::string expected;
  std::string actual;
  Status status = Status::kPass;
  std::string note;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::string suite;
  Json options = Json::object();
  std::vector<CheckRecord> records;
  double elapsed_ms = 0;

  long count(Status s) const {
    long c = 0;
    for (const auto& r : records) c += r.status == s;
    return c;
  }
  Status status() const {
    if (count(Status::kFail) > 0) return Status::kFail;
    if (count(Status::kSkip) > 0) return Status::kSkip;
    return Status::kPass;
  }
  int exit_code() const {
    switch (status()) {
      case Status::kPass: return kExitPass;
      case Status::kFail: return kExitFail;
      case Status::kSkip: return kExitSkip;
    }
    return kExitFail;
  }

  // Elapsed times vary between runs and are left out unless asked for.
  Json to_json(bool timings = false) const {
    Json recs = Json::array();
    for (const auto& r : records) {
      Json j{{"check", r.check}, {"input", r.input}, {"expected", r.expected},
             {"actual", r.actual}, {"status", to_string(r.status)}};
      if (!r.note.empty()) j["note"] = r.note;
      if (timings) j["elapsed_ms"] = std::to_string(static_cast<long long>(r.elapsed_ms));
      recs.push_back(std::move(j));
    }
    Json out{{"suite", suite},
             {"engine", kEngineVersion},
             {"options", options},
             {"summary",
              {{"checks", num(static_cast<long>(records.size()))},
               {"passed", num(count(Status::kPass))},
               {"failed", num(count(Status::kFail))},
               {"skipped", num(count(Status::kSkip))},
               {"status", to_string(status())}}},
             {"records", recs}};
    if (timings) out["elapsed_ms"] = std::to_string(static_cast<long long>(elapsed_ms));
    return out;
  }
};

struct SuiteOptions {
  std::optional<int> n;
  std::optional<int> max_n;
  std::optional<RegionSpec> region;
  std::optional<Partition> lambda;
  std::optional<int> max;
  int threads = 1;
  Cache* cache = nullptr;

  Json to_json() const {
    Json j = Json::object();
    if (n) j["n"] = num(*n);
    if (max_n) j["max_n"] = num(*max_n);
    if (region) j["region"] = fplcount::to_json(*region);
    if (lambda) j["lambda"] = fplcount::to_json(*lambda);
    if (max) j["max"] = num(*max);
    return j;
  }
};

namespace detail {

// Runs one check. The body returns (expected, actual) or a full record;
// guard overruns become skips and domain errors failures.
class Recorder {
 public:
  explicit Recorder(SuiteReport& rep) : rep_(rep) {}

  void run(const std::string& check, Json input,
           const std::function<std::pair<std::string, std::string>()>& body,
           std::string note = {}) {
    CheckRecord rec{check, std::move(input), "", "", Status::kPass, std::move(note), 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [e, a] = body();
      rec.expected = std::move(e);
      rec.actual = std::move(a);
      rec.status = rec.expected == rec.actual ? Status::kPass : Status::kFail;
    } catch (const GuardExceeded& g) {
      rec.status = Status::kSkip;
      rec.note = g.what();
    } catch (const DomainError& d) {
      rec.status = Status::kFail;
      rec.note = d.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep_.records.push_back(std::move(rec));
  }

  // Records the note of the last check.
  void annotate(const std::string& note) {
    auto& n = rep_.records.back().note;
    n = n.empty() ? note : n + "; " + note;
  }

 private:
  SuiteReport& rep_;
};

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline Json pqr(int p, int q, int r) { return Json{{"p", num(p)}, {"q", num(q)}, {"r", num(r)}}; }

inline Json placement_json(Family fam, int p, int q, int r) {
  Json j{{"placement", fam == Family::kA ? "A" : "B"}};
  j.update(pqr(p, q, r));
  return j;
}

inline int placement_n(Family fam, int p, int q, int r) {
  return p + q + r + (fam == Family::kA ? 1 : 2);
}

// Partitions with at most `rows` parts, each at most `cols`, non-empty, in
// reverse lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int bound) {
    if (!parts.empty()) out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int v = bound; v >= 1; --v) {
      parts.push_back(v);
      rec(v);
      parts.pop_back();
    }
  };
  rec(cols);
  return out;
}

inline ExactInt ssyt_oracle(const Partition& lambda, int n) {
  ExactInt c = 0;
  for_each_ssyt(lambda, n, [&](const Ssyt&) { ++c; });
  return c;
}

inline ExactInt cached(SuiteOptions& o, const std::string& op, const Json& input,
                       const std::function<ExactInt()>& fn) {
  if (o.cache) return o.cache->exact(op, input, fn);
  return fn();
}

inline ExactInt tilings_of(SuiteOptions& o, const RegionSpec& spec) {
  return cached(o, "count_tilings", fplcount::to_json(spec),
                [&] { return count_tilings(build_special(spec), o.threads); });
}

inline ExactInt fpl_count_of(SuiteOptions& o, const LinkPattern& m) {
  return cached(o, "fpl_count", fplcount::to_json(m), [&]() -> ExactInt {
    const Parity parity = validate_pattern(m);
    std::atomic<long> total{0};
    for_each_fpl(m.n, parity, [&](const FplConfig& c) {
      if (trace_matching(c) == m) ++total;
    }, o.threads);
    return ExactInt(total.load());
  });
}

}  // namespace detail

// Criterion-level suites. Each takes the shared options and fills a report.

inline void suite_hook_content(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_entry = o.max.value_or(6);
  std::vector<Partition> shapes =
      o.lambda ? std::vector<Partition>{*o.lambda} : detail::partitions_in_box(4, 4);
  for (const Partition& lambda : shapes) {
    for (int n = 1; n <= max_entry; ++n) {
      rec.run("hook_content_count = SSYT enumeration",
              Json{{"lambda", to_json(lambda)}, {"n", num(n)}}, [&] {
                return std::pair{to_decimal(detail::ssyt_oracle(lambda, n)),
                                 to_decimal(hook_content_count(lambda, n))};
              });
    }
  }
}

inline void suite_macmahon(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  std::vector<HexagonSpec> hexes;
  if (o.region) {
    const auto* h = std::get_if<HexagonSpec>(&*o.region);
    if (!h) throw DomainError("macmahon takes a Hexagon region");
    hexes.push_back(*h);
  } else {
    const int m = o.max.value_or(3);
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q)
        for (int r = 0; r <= m; ++r) hexes.push_back({p, q, r});
  }
  for (const HexagonSpec& h : hexes) {
    rec.run("macmahon_h = tiling count", to_json(RegionSpec{h}), [&] {
      return std::pair{to_decimal(detail::tilings_of(o, h)), to_decimal(macmahon_h(h.p, h.q, h.r))};
    });
  }
}

inline void suite_rlambda(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_r = o.max.value_or(3);
  const auto shapes = o.lambda ? std::vector<Partition>{*o.lambda} : detail::partitions_in_box(3, 4);
  for (const Partition& lambda : shapes) {
    const int rows = lambda.length();
    for (int r = 0; r <= max_r; ++r) {
      const Json input{{"lambda", to_json(lambda)}, {"r", num(r)}};
      rec.run("tilings of R(lambda,r) = hook_content_count(lambda, r+lambda'_1)", input, [&] {
        return std::pair{to_decimal(detail::tilings_of(o, RLambdaSpec{lambda, r})),
                         to_decimal(hook_content_count(lambda, r + rows))};
      });
      rec.run("lgv_count = hook_content_count", input, [&] {
        return std::pair{to_decimal(hook_content_count(lambda, r + rows)), to_decimal(lgv_count(lambda, r))};
      });
    }
  }
  // Exhaustive round trips on the smaller box.
  const auto small = o.lambda ? shapes : detail::partitions_in_box(2, 3);
  for (const Partition& lambda : small) {
    for (int r = 0; r <= std::min(max_r, 2); ++r) {
      const int bound = r + lambda.length();
      rec.run("tiling -> paths -> SSYT round trip",
              Json{{"lambda", to_json(lambda)}, {"r", num(r)}}, [&] {
                const auto tilings = enumerate_tilings(build_R(lambda, r));
                std::set<std::vector<std::vector<int>>> tableaux;
                long good = 0;
                for (const Tiling& t : tilings) {
                  const PathFamily fam = tiling_to_paths(t, lambda, r);
                  const Ssyt tab = paths_to_ssyt(fam);
                  const bool ok = tab.shape == lambda && tab.valid(bound) &&
                                  paths_to_tiling(fam) == t && ssyt_to_paths(tab, r).paths == fam.paths;
                  if (ok && tableaux.insert(tab.rows).second) ++good;
                }
                return std::pair{to_decimal(hook_content_count(lambda, bound)), std::to_string(good)};
              },
              "actual counts distinct round-tripped tableaux");
    }
  }
}

// Expected side lengths of the worked example regions.
inline Runs example_runs(const RegionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Runs {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HexagonSpec> || std::is_same_v<T, RLambdaSpec> ||
                      std::is_same_v<T, FSpec> || std::is_same_v<T, EaredHexagonSpec>) {
          throw DomainError("no reference side data for this region");
        } else {
        const int p = s.p, q = s.q, r = s.r;
        if constexpr (std::is_same_v<T, KSpec>) {
          return {{0, p + 1}, {1, r + 1}, {2, q - 1}, {3, 1}, {4, 1}, {2, 1}, {3, p}, {4, r}, {5, q}};
        } else if constexpr (std::is_same_v<T, LSpec>) {
          return {{0, p + 2}, {1, r}, {2, q}, {3, p + 1}, {4, 2}, {2, 2}, {3, 1}, {4, r - 2}, {5, q + 2}};
        } else if constexpr (std::is_same_v<T, MSpec>) {
          return {{0, p + 2}, {1, r + 1}, {2, q - 1}, {3, 1}, {4, 1}, {2, 1},
                  {3, p},     {4, 1},     {2, 1},     {3, 1}, {4, r - 1}, {5, q + 1}};
        } else {
          return {{0, p + 2}, {1, r + 1}, {2, q - 1}, {3, 2}, {4, 1}, {2, 1}, {3, p}, {4, r}, {5, q}};
        }
        }
      },
      spec);
}

inline std::string runs_string(const Runs& runs) {
  std::string s;
  for (auto [d, l] : runs) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(l);
  return s;
}

inline void suite_klmn(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int m = o.max.value_or(3);
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      for (int r = 1; r <= m; ++r) {
        const LmnValues lmn = lmn_formulas(p, q, r);
        rec.run("k_formula = tilings of K", to_json(RegionSpec{KSpec{p, q, r}}), [&] {
          return std::pair{to_decimal(detail::tilings_of(o, KSpec{p, q, r})), to_decimal(k_formula(p, q, r))};
        });
        if (r >= 2) {
          rec.run("l = tilings of L", to_json(RegionSpec{LSpec{p, q, r}}), [&] {
            return std::pair{to_decimal(detail::tilings_of(o, LSpec{p, q, r})), to_decimal(lmn.l)};
          });
        }
        rec.run("m = tilings of M", to_json(RegionSpec{MSpec{p, q, r}}), [&] {
          return std::pair{to_decimal(detail::tilings_of(o, MSpec{p, q, r})), to_decimal(lmn.m)};
        });
        rec.run("n = tilings of N", to_json(RegionSpec{NSpec{p, q, r}}), [&] {
          return std::pair{to_decimal(detail::tilings_of(o, NSpec{p, q, r})), to_decimal(lmn.n)};
        });
      }
    }
  }
  for (const RegionSpec& spec : {RegionSpec{KSpec{10, 2, 9}}, RegionSpec{LSpec{4, 3, 5}},
                                 RegionSpec{MSpec{4, 3, 5}}, RegionSpec{NSpec{4, 3, 5}}}) {
    rec.run("worked example side lengths", to_json(spec), [&] {
      return std::pair{runs_string(example_runs(spec)), runs_string(build_special(spec).boundary_runs())};
    });
  }
}

// Builder regions used for the flip-connectivity check.
inline std::vector<RegionSpec> flip_test_set() {
  std::vector<RegionSpec> out;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 1; r <= 3; ++r) out.push_back(HexagonSpec{p, q, r});
  for (const Partition& lambda : detail::partitions_in_box(3, 3)) {
    for (int r = 0; r <= 2; ++r) out.push_back(RLambdaSpec{lambda, r});
  }
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      for (int r = 1; r <= 2; ++r) {
        out.push_back(KSpec{p, q, r});
        out.push_back(MSpec{p, q, r});
        out.push_back(NSpec{p, q, r});
        out.push_back(LSpec{p, q, r + 1});
        out.push_back(FSpec{p, q, r, 1});
        out.push_back(FSpec{p, q, r, 2});
        out.push_back(EaredHexagonSpec{p + 1, q, r, 1});
      }
    }
  }
  out.push_back(KSpec{2, 2, 2});
  return out;
}

inline void suite_flips(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const std::uint64_t limit = static_cast<std::uint64_t>(o.max.value_or(5000));
  const auto specs = o.region ? std::vector<RegionSpec>{*o.region} : flip_test_set();
  for (const RegionSpec& spec : specs) {
    FlipGraphReport fg;
    rec.run("flip graph connected", to_json(spec), [&] {
      fg = flip_graph(build_special(spec), limit);
      return std::pair{"connected, " + std::to_string(fg.tilings) + " tilings",
                       std::string(fg.connected() ? "connected" : "disconnected") + ", " +
                           std::to_string(fg.reached) + " tilings"};
    });
    if (rep.records.back().status != Status::kSkip) rec.annotate(std::to_string(fg.edges) + " flip edges");
  }
}

inline void suite_wieland(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int guard = o.max_n.value_or(6);
  const std::vector<int> sizes = o.n ? std::vector<int>{*o.n} : std::vector<int>{3, 4, 5};
  // Matching counts and configuration totals per size.
  const std::map<int, std::pair<int, long>> known{{1, {1, 1}}, {2, {2, 2}}, {3, {5, 7}}, {4, {14, 42}},
                                                  {5, {42, 429}}, {6, {132, 7436}}, {7, {429, 218348}}};
  for (int n : sizes) {
    rec.run("FPL(M) = FPL(rotated M) for all M", Json{{"n", num(n)}}, [&] {
      if (n > kMaxEnumerationN) {
        throw GuardExceeded("n=" + std::to_string(n) + " exceeds the enumeration guard");
      }
      const WielandReport w = wieland_check(n, std::min(guard, kMaxEnumerationN), o.threads);
      std::string expected = "0 violations";
      if (auto it = known.find(n); it != known.end()) {
        expected += ", " + std::to_string(it->second.first) + " matchings, totals " +
                    std::to_string(it->second.second) + "/" + std::to_string(it->second.second);
      }
      std::string actual = std::to_string(w.violations.size()) + " violations";
      if (known.count(n)) {
        actual += ", " + std::to_string(w.matchings_checked) + " matchings, totals " +
                  to_decimal(w.total_even) + "/" + to_decimal(w.total_odd);
      }
      return std::pair{expected, actual};
    });
  }
}

// Placements checked against z1; those beyond --max-n are left out.
inline std::vector<std::array<int, 3>> z1_placements() {
  return {{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {2, 3, 1}, {2, 1, 3},
          {3, 2, 1}, {3, 1, 2}, {4, 1, 1}, {3, 2, 2}, {4, 2, 1}, {5, 1, 1}};
}

inline void suite_z1(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_n = o.max_n.value_or(6);
  for (auto [p, q, r] : z1_placements()) {
    const int n = detail::placement_n(Family::kA, p, q, r);
    if (n > max_n || (o.n && *o.n != n)) continue;
    rec.run("fpl_count(placement A) = z1", detail::placement_json(Family::kA, p, q, r), [&] {
      return std::pair{to_decimal(detail::fpl_count_of(o, zuber_pattern_A(p, q, r))), to_decimal(z1(p, q, r))};
    });
  }
  rec.run("frozen value", detail::pqr(2, 1, 1), [] { return std::pair{std::string("14"), to_decimal(z1(2, 1, 1))}; });
  rec.run("frozen value", detail::pqr(3, 1, 1), [] { return std::pair{std::string("23"), to_decimal(z1(3, 1, 1))}; });
  for (int p = 1; p <= 10; ++p) {
    if (p % 2 == 1 && p > 9) continue;
    for (int q = 1; q <= 6; ++q) {
      for (int r = 1; r <= 6; ++r) {
        const long sl = p % 2 == 0 ? p / 2 : (p - 1) / 2;
        const long sr = p % 2 == 0 ? p / 2 : (p + 1) / 2;
        rec.run("z1 = f(p,q,r,s) + f(p,r,q,s')", detail::pqr(p, q, r), [&] {
          return std::pair{to_decimal(ExactInt(f_formula(p, q, r, sl) + f_formula(p, r, q, sr))), to_decimal(z1(p, q, r))};
        });
      }
    }
  }
}

inline std::vector<std::array<int, 3>> z2_placements() {
  return {{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 2}, {4, 1, 1}};
}

inline void suite_z2(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_n = o.max_n.value_or(7);
  for (auto [p, q, r] : z2_placements()) {
    const int n = detail::placement_n(Family::kB, p, q, r);
    if (n > max_n || (o.n && *o.n != n)) continue;
    const bool even = p % 2 == 0;
    rec.run(even ? "fpl_count(placement B) = z2_component_sum" : "fpl_count(placement B) = z2 compact form",
            detail::placement_json(Family::kB, p, q, r), [&] {
              return std::pair{to_decimal(detail::fpl_count_of(o, zuber_pattern_B(p, q, r))),
                               to_decimal(even ? z2_component_sum(p, q, r) : z2(p, q, r))};
            });
  }
  rec.run("frozen value", detail::pqr(2, 1, 1),
          [] { return std::pair{std::string("41"), to_decimal(z2_component_sum(2, 1, 1))}; });
  rec.run("inner factor with 4qr disagrees with the component sum", detail::pqr(2, 1, 1), [] {
    const ExactRat printed = z2_compact_rational(2, 1, 1, 4);
    return std::pair{std::string("differs"),
                     printed == ExactRat(z2_component_sum(2, 1, 1)) ? "agrees" : "differs"};
  }, "4qr gives " + to_decimal(z2_compact_rational(2, 1, 1, 4)));
  for (int p = 2; p <= 10; p += 2) {
    for (int q = 1; q <= 6; ++q) {
      for (int r = 1; r <= 6; ++r) {
        rec.run("z2 compact form (3qr) = component sum", detail::pqr(p, q, r), [&] {
          return std::pair{to_decimal(z2_component_sum(p, q, r)), to_decimal(z2(p, q, r))};
        });
      }
    }
  }
}

inline void suite_fixed_edges(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_n = o.max_n.value_or(7);
  for (Family fam : {Family::kA, Family::kB}) {
    for (auto [p, q, r] : std::vector<std::array<int, 3>>{{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}}) {
      const int n = detail::placement_n(fam, p, q, r);
      if (n > max_n || (o.n && *o.n != n)) continue;
      const Json where = detail::placement_json(fam, p, q, r);
      const LinkPattern m = fam == Family::kA ? zuber_pattern_A(p, q, r) : zuber_pattern_B(p, q, r);
      const std::vector<FplConfig> configs = configurations_with(m);
      const FixedEdgeSet consensus = consensus_of(configs);
      auto outside = [&](const FixedEdgeSet& f) {
        long k = 0;
        for (int e : f.edges.edges()) k += !consensus.edges.contains(e);
        return std::to_string(k) + " edges outside";
      };
      const std::vector<TriangleRun> runs = triangle_runs(m);
      std::vector<FixedEdgeSet> triangles;
      for (const TriangleRun& run : runs) {
        Json in = where;
        in["run"] = Json{{"first", num(run.first)}, {"last", num(run.last)},
                         {"case", num(run.which)}, {"turns", num(run.turns)}};
        triangles.push_back(fixed_triangle(n, run));
        rec.run("fixed_triangle within consensus", in,
                [&] { return std::pair{std::string("0 edges outside"), outside(triangles.back())}; });
      }
      const PropagationResult prop = degier_propagate(boundary_of(m), distinct_runs(m));
      rec.run("propagation closure within consensus", where,
              [&] { return std::pair{std::string("0 edges outside"), outside(prop.fixed)}; },
              std::to_string(prop.fixed.size()) + " of " + std::to_string(consensus.size()) + " consensus edges");
      rec.run("case-1 triangles within propagation closure", where, [&] {
        long missing = 0;
        for (size_t i = 0; i < runs.size(); ++i) {
          if (runs[i].which == 1 && !triangles[i].subset_of(prop.fixed)) ++missing;
        }
        return std::pair{std::string("0 triangles missing"), std::to_string(missing) + " triangles missing"};
      });
      rec.run("closure seeded with all triangles within consensus", where, [&] {
        PartialConfig seeded = boundary_of(m);
        for (const auto& t : triangles) seeded.occupied.unite_with(t.edges);
        return std::pair{std::string("0 edges outside"), outside(degier_propagate(seeded, distinct_runs(m)).fixed)};
      });
      const FiringAudit audit = audit_firings(prop.firings, configs);
      long inherited = 0;
      for (const Firing& f : prop.firings) inherited += f.kind == FiringKind::kInherited;
      rec.run("firings satisfy the loop hypotheses", where,
              [&] { return std::pair{std::string("sound"), std::string(audit.sound() ? "sound" : "unsound")}; },
              std::to_string(audit.firings) + " firings (" + std::to_string(inherited) + " inherited) over " +
                  std::to_string(audit.configs) + " configurations; third-loop condition fails on " +
                  std::to_string(audit.third_loop_fails) + " pairs, adjacency condition on " +
                  std::to_string(audit.second_rule_fails));
    }
  }
}

inline void add_case_records(detail::Recorder& rec, SuiteOptions& o, Family fam, int p, int q, int r,
                             const std::vector<CaseReport>& cases) {
  const Json where = detail::placement_json(fam, p, q, r);
  const LinkPattern m = fam == Family::kA ? zuber_pattern_A(p, q, r) : zuber_pattern_B(p, q, r);
  rec.run("case counts sum to fpl_count", where, [&] {
    ExactInt sum = 0;
    for (const auto& c : cases) sum += c.count;
    return std::pair{to_decimal(detail::fpl_count_of(o, m)), to_decimal(sum)};
  });
  for (const CaseReport& c : cases) {
    Json in = where;
    in["case"] = num(c.index);
    const std::string count = to_decimal(c.count);
    rec.run("case count positive", in, [&] { return std::pair{std::string("true"), detail::yes(c.count > 0)}; });
    rec.run("perfect matchings of free-vertex graph", in, [&] { return std::pair{count, to_decimal(c.matchings)}; });
    rec.run("completions of fixed edges", in, [&] { return std::pair{count, to_decimal(c.completions)}; });
    rec.run("tilings of embedded region", in, [&] {
      return std::pair{count, c.embedded ? to_decimal(c.tilings) : std::string("no embedding")};
    });
    rec.run("case formula", in, [&] { return std::pair{count, to_decimal(c.formula)}; });
  }
}

inline void suite_case_split(SuiteOptions& o, SuiteReport& rep) {
  detail::Recorder rec(rep);
  const int max_n = o.max_n.value_or(6);
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{{2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}}) {
    const int n = detail::placement_n(Family::kA, p, q, r);
    if (n > max_n || (o.n && *o.n != n)) continue;
    const auto reports = case_reports_A(p, q, r);
    add_case_records(rec, o, Family::kA, p, q, r, {reports.begin(), reports.end()});
    if (p % 2 != 0) continue;
    const auto split = split_A(p, q, r);
    for (int side = 0; side < 2; ++side) {
      Json in = detail::placement_json(Family::kA, p, q, r);
      in["case"] = num(side + 1);
      const EaredHexagonSpec eared = side == 0 ? EaredHexagonSpec{p, q, r, p / 2} : EaredHexagonSpec{p, r, q, p / 2};
      in["region"] = to_json(RegionSpec{eared});
      rec.run("free-vertex graph isomorphic to eared hexagon", in, [&] {
        const FreeVertexGraph fg = free_vertex_graph(split[static_cast<size_t>(side)].fixed);
        return std::pair{std::string("true"), detail::yes(isomorphic_to_region(fg, build_special(eared)))};
      });
    }
  }
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{{2, 1, 1}, {2, 2, 1}, {2, 1, 2}}) {
    const int n = detail::placement_n(Family::kB, p, q, r);
    if (n > max_n || (o.n && *o.n != n)) continue;
    const auto reports = case_reports_B(p, q, r);
    add_case_records(rec, o, Family::kB, p, q, r, {reports.begin(), reports.end()});
    Json in = detail::placement_json(Family::kB, p, q, r);
    rec.run("case formulas", in, [&] {
      std::string want, got;
      const auto f = z2_case_values(p, q, r);
      for (int i = 0; i < 4; ++i) {
        want += (i ? " " : "") + to_decimal(reports[static_cast<size_t>(i)].count);
        got += (i ? " " : "") + to_decimal(f[static_cast<size_t>(i)]);
      }
      return std::pair{want, got};
    });
  }
  // Eared hexagon: tiling count and reduction to F by the forced strip.
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (int r = 1; r <= 3; ++r) {
        for (int s = 1; 2 * s <= p + 2 && s <= 3; ++s) {
          const EaredHexagonSpec e{p, q, r, s};
          const Json in = to_json(RegionSpec{e});
          rec.run("tilings of eared hexagon = f", in, [&] {
            return std::pair{to_decimal(f_formula(p, q, r, s)), to_decimal(detail::tilings_of(o, e))};
          });
          rec.run("eared hexagon minus forced strip congruent to F", in, [&] {
            return std::pair{std::string("true"),
                             detail::yes(congruent(strip_forced(build_special(e)), build_special(FSpec{p, q, r, s})))};
          });
        }
      }
    }
  }
  // The connector tile of F splits its tilings into h*h and k.
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 2; ++s) {
          rec.run("connector split of F", to_json(RegionSpec{FSpec{p, q, r, s}}), [&] {
            const TriRegion region = build_special(FSpec{p, q, r, s});
            const Connectors c = f_connectors(p, q, r);
            const ExactInt right = count_tilings_with(region, c.right);
            const ExactInt left = count_tilings_with(region, c.left);
            return std::pair{to_decimal(ExactInt(macmahon_h(p + 1, q, r) * macmahon_h(s - 1, 1, 1))) + " + " +
                                 to_decimal(k_formula(p, q, r)) + " = " + to_decimal(f_formula(p, q, r, s)),
                             to_decimal(right) + " + " + to_decimal(left) + " = " +
                                 to_decimal(detail::tilings_of(o, FSpec{p, q, r, s}))};
          });
        }
      }
    }
  }
}

struct SuiteInfo {
  const char* name;
  int criterion;
  double budget_s;
  void (*run)(SuiteOptions&, SuiteReport&);
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"hook-content", 1, 30, suite_hook_content}, {"macmahon", 2, 60, suite_macmahon},
      {"rlambda", 3, 120, suite_rlambda},          {"klmn", 4, 120, suite_klmn},
      {"flips", 5, 60, suite_flips},               {"wieland", 6, 60, suite_wieland},
      {"z1", 7, 300, suite_z1},                    {"z2", 8, 300, suite_z2},
      {"fixed-edges", 9, 120, suite_fixed_edges},  {"case-split", 10, 300, suite_case_split}};
  return all;
}

inline const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

inline SuiteReport run_suite(const std::string& name, SuiteOptions& o) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw DomainError("unknown suite \"" + name + "\"");
  SuiteReport rep;
  rep.suite = name;
  rep.options = o.to_json();
  const auto t0 = std::chrono::steady_clock::now();
  info->run(o, rep);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace fplcount
