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

// Runs every suite with default options and prints one line per criterion.

#include <cstdio>

#include "fplcount/harness.hpp"

int main() {
  using namespace fplcount;
  int failures = 0;
  for (const SuiteInfo& s : suites()) {
    SuiteOptions o;
    o.threads = 4;
    SuiteReport rep;
    try {
      rep = run_suite(s.name, o);
    } catch (const std::exception& e) {
      std::printf("criterion %2d %-13s FAIL  (%s)\n", s.criterion, s.name, e.what());
      ++failures;
      continue;
    }
    const double secs = rep.elapsed_ms / 1000.0;
    const bool in_budget = secs <= s.budget_s;
    const bool ok = rep.status() == Status::kPass && in_budget;
    failures += !ok;
    std::printf("criterion %2d %-13s %s  %ld/%zu checks passed, %ld failed, %ld skipped, %.2fs of %.0fs budget\n",
                s.criterion, s.name, ok ? "PASS" : "FAIL", rep.count(Status::kPass), rep.records.size(),
                rep.count(Status::kFail), rep.count(Status::kSkip), secs, s.budget_s);
    for (const CheckRecord& r : rep.records) {
      if (r.status != Status::kPass) {
        std::printf("    %s %s: expected %s, got %s %s\n", to_string(r.status), r.check.c_str(),
                    r.expected.c_str(), r.actual.c_str(), r.note.c_str());
      }
    }
  }
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria fail");
  return failures == 0 ? 0 : 1;
}
