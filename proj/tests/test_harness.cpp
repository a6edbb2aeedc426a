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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "fplcount/harness.hpp"

namespace fplcount {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("fplcount-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Cache, WarmEqualsCold) {
  TempDir dir;
  SuiteOptions cold_opts;
  Cache cold(dir.path());
  cold_opts.cache = &cold;
  const SuiteReport a = run_suite("z1", cold_opts);
  EXPECT_GT(cold.misses(), 0u);
  EXPECT_EQ(cold.hits(), 0u);

  SuiteOptions warm_opts;
  Cache warm(dir.path());
  warm_opts.cache = &warm;
  const SuiteReport b = run_suite("z1", warm_opts);
  EXPECT_EQ(warm.misses(), 0u);
  EXPECT_EQ(warm.hits(), cold.misses());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Cache, OtherEngineIgnored) {
  TempDir dir;
  {
    std::ofstream out(dir.path() / "cache.jsonl");
    out << Json{{"key", "k"}, {"value", "5"}, {"engine", "fplcount-0.0"}}.dump() << "\n";
    out << "not json\n";
  }
  Cache c(dir.path());
  EXPECT_FALSE(c.get("k"));
  EXPECT_EQ(c.exact("op", Json("x"), [] { return ExactInt(9); }), 9);
  Cache again(dir.path());
  EXPECT_EQ(again.exact("op", Json("x"), [] { return ExactInt(-1); }), 9);
  EXPECT_EQ(again.hits(), 1u);
}

TEST(Cache, AppendOnly) {
  TempDir dir;
  Cache c(dir.path());
  c.put("a", "1");
  c.put("a", "2");
  c.put("b", "3");
  std::ifstream in(c.file());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
  EXPECT_EQ(*c.get("a"), "1");
}

TEST(Cache, DirectoryPrecedence) {
  ::setenv(kCacheEnv, "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir("/tmp/from-flag"), fs::path("/tmp/from-flag"));
  EXPECT_EQ(resolve_cache_dir(""), fs::path("/tmp/from-env"));
  ::unsetenv(kCacheEnv);
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(resolve_cache_dir(""), fs::path("/tmp/xdg/fplcount"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST(Report, Deterministic) {
  for (const char* name : {"hook-content", "flips", "case-split"}) {
    SuiteOptions o1, o2;
    o2.threads = 4;
    EXPECT_EQ(run_suite(name, o1).to_json().dump(), run_suite(name, o2).to_json().dump()) << name;
  }
}

TEST(Report, SummaryMatchesRecords) {
  SuiteOptions o;
  const SuiteReport rep = run_suite("wieland", o);
  const Json j = rep.to_json();
  EXPECT_EQ(j["summary"]["checks"], Json(std::to_string(j["records"].size())));
  long pass = 0;
  for (const Json& r : j["records"]) pass += r["status"] == "pass";
  EXPECT_EQ(j["summary"]["passed"], Json(std::to_string(pass)));
  EXPECT_EQ(rep.exit_code(), kExitPass);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_TRUE(rep.to_json(true).contains("elapsed_ms"));
}

TEST(Report, GuardSkip) {
  SuiteOptions o;
  o.n = 8;
  const SuiteReport rep = run_suite("wieland", o);
  EXPECT_EQ(rep.status(), Status::kSkip);
  EXPECT_EQ(rep.exit_code(), kExitSkip);
}

TEST(Report, FailureExitCode) {
  SuiteReport rep;
  detail::Recorder rec(rep);
  rec.run("ok", Json::object(), [] { return std::pair<std::string, std::string>{"1", "1"}; });
  rec.run("bad", Json::object(), [] { return std::pair<std::string, std::string>{"1", "2"}; });
  rec.run("skip", Json::object(), []() -> std::pair<std::string, std::string> { throw GuardExceeded("big"); });
  EXPECT_EQ(rep.count(Status::kPass), 1);
  EXPECT_EQ(rep.count(Status::kFail), 1);
  EXPECT_EQ(rep.count(Status::kSkip), 1);
  EXPECT_EQ(rep.exit_code(), kExitFail);
}

TEST(Suites, AllKnown) {
  EXPECT_EQ(suites().size(), 10u);
  for (size_t i = 0; i < suites().size(); ++i) EXPECT_EQ(suites()[i].criterion, static_cast<int>(i) + 1);
  SuiteOptions o;
  EXPECT_THROW(run_suite("nope", o), DomainError);
}

TEST(Suites, RegionOverride) {
  SuiteOptions o;
  o.region = HexagonSpec{2, 2, 2};
  const SuiteReport rep = run_suite("flips", o);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.status(), Status::kPass);
}

}  // namespace
}  // namespace fplcount
