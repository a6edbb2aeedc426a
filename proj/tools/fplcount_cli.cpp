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

// Command-line front end: formula, verify, enumerate, wieland.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fplcount/fplcount.hpp"

namespace {

using namespace fplcount;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long arg(const std::vector<std::string>& params, size_t i) {
  if (i >= params.size()) throw UsageError("missing parameter " + std::to_string(i + 1));
  try {
    size_t used = 0;
    const long v = std::stol(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument(params[i]);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("parameter \"" + params[i] + "\" is not an integer");
  }
}

void expect_count(const std::vector<std::string>& params, size_t n, const std::string& name) {
  if (params.size() != n) {
    throw UsageError(name + " takes " + std::to_string(n) + " parameters, got " + std::to_string(params.size()));
  }
}

std::string formula(const std::string& name, const std::vector<std::string>& params,
                    const std::optional<Partition>& lambda, const std::optional<int>& n) {
  if (name == "hook-content") {
    if (lambda && n) return to_decimal(hook_content_count(*lambda, *n));
    // The argument parser splits "[2,1]" into its parts; glue them back.
    if (params.size() < 2) expect_count(params, 2, name);
    std::string parts;
    for (size_t i = 0; i + 1 < params.size(); ++i) parts += params[i] + " ";
    return to_decimal(hook_content_count(parse_partition(parts), arg(params, params.size() - 1)));
  }
  if (name == "f") {
    expect_count(params, 4, name);
    return to_decimal(f_formula(arg(params, 0), arg(params, 1), arg(params, 2), arg(params, 3)));
  }
  expect_count(params, 3, name);
  const long p = arg(params, 0), q = arg(params, 1), r = arg(params, 2);
  if (name == "h") return to_decimal(macmahon_h(p, q, r));
  if (name == "a") return to_decimal(a_factor(p, q, r));
  if (name == "k") return to_decimal(k_formula(p, q, r));
  if (name == "l") return to_decimal(lmn_formulas(p, q, r).l);
  if (name == "m") return to_decimal(lmn_formulas(p, q, r).m);
  if (name == "n") return to_decimal(lmn_formulas(p, q, r).n);
  if (name == "z1") return to_decimal(z1(p, q, r));
  if (name == "z2") {
    const ExactInt v = z2(p, q, r);
    if (p % 2 == 0 && v != z2_component_sum(p, q, r)) {
      std::cerr << "warning: compact form and component sum disagree\n";
    }
    return to_decimal(v);
  }
  if (name == "z2-components") {
    static const char* labels[] = {"h-term", "k-term", "k'-term", "l", "m", "n"};
    const auto c = z2_components(p, q, r);
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) out += std::string(labels[i]) + " " + to_decimal(c[i]) + "\n";
    return out + "sum " + to_decimal(z2_component_sum(p, q, r));
  }
  throw UsageError("unknown formula \"" + name + "\"");
}

// Output goes to --output when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of fully packed loops, rhombus tilings and tableaux"};
  app.require_subcommand(1);

  std::optional<int> n, max_n, max;
  std::vector<std::string> region_tokens, params;
  std::string lambda_text, cache_dir, output, name, kind, parity_text = "odd";
  int threads = 1;
  bool no_cache = false, timings = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Grid size or tableau bound");
    sub->add_option("--max-n", max_n, "Largest grid size to include");
    sub->add_option("--region", region_tokens, "Region, e.g. H 2 2 2 or a JSON object")->expected(1, 5);
    sub->add_option("--lambda", lambda_text, "Partition, e.g. [2,1]");
    sub->add_option("--max", max, "Upper bound on entries or parameters");
    sub->add_option("--parallel", threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));
    sub->add_option("--output", output, "Output file");
  };

  CLI::App* f = app.add_subcommand("formula", "Evaluate a closed formula");
  f->add_option("name", name, "h, a, k, l, m, n, f, z1, z2, z2-components, hook-content")->required();
  f->add_option("params", params, "Parameters");
  common(f);

  CLI::App* v = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  v->add_option("suite", name, "Suite name or \"all\"")->required();
  v->add_option("--cache-dir", cache_dir, std::string("Cache directory (overrides $") + kCacheEnv + ")");
  v->add_flag("--no-cache", no_cache, "Do not read or write the cache");
  v->add_flag("--timings", timings, "Include elapsed times in the report");
  common(v);

  CLI::App* e = app.add_subcommand("enumerate", "Write one JSON object per line");
  e->add_option("kind", kind, "fpl, tilings or ssyt")->required()->check(CLI::IsMember({"fpl", "tilings", "ssyt"}));
  e->add_option("--parity", parity_text, "Occupied link class for fpl")->check(CLI::IsMember({"odd", "even"}));
  common(e);

  CLI::App* w = app.add_subcommand("wieland", "Check rotation invariance of FPL counts");
  common(w);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    std::optional<Partition> lambda;
    if (!lambda_text.empty()) lambda = parse_partition(lambda_text);
    std::optional<RegionSpec> region;
    if (!region_tokens.empty()) region = parse_region(region_tokens);

    if (f->parsed()) {
      Sink sink(output);
      sink.out() << formula(name, params, lambda, n) << "\n";
      return kExitPass;
    }

    if (v->parsed()) {
      std::unique_ptr<Cache> cache;
      if (!no_cache) {
        const auto dir = resolve_cache_dir(cache_dir);
        if (!dir.empty()) cache = std::make_unique<Cache>(dir);
      }
      SuiteOptions opts{n, max_n, region, lambda, max, threads, cache.get()};
      std::vector<std::string> names;
      if (name == "all") {
        for (const auto& s : suites()) names.push_back(s.name);
      } else if (!find_suite(name)) {
        throw UsageError("unknown suite \"" + name + "\"");
      } else {
        names.push_back(name);
      }
      Json reports = Json::array();
      int worst = kExitPass;
      for (const auto& s : names) {
        const SuiteReport rep = run_suite(s, opts);
        reports.push_back(rep.to_json(timings));
        std::cerr << s << ": " << to_string(rep.status()) << " (" << rep.count(Status::kPass) << " passed, "
                  << rep.count(Status::kFail) << " failed, " << rep.count(Status::kSkip) << " skipped)\n";
        const int code = rep.exit_code();
        if (code == kExitFail || (code == kExitSkip && worst == kExitPass)) worst = code;
      }
      Sink sink(output);
      sink.out() << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return worst;
    }

    if (e->parsed()) {
      Sink sink(output);
      if (kind == "fpl") {
        if (!n) throw UsageError("enumerate fpl needs --n");
        const Parity parity = parity_text == "odd" ? Parity::kOdd : Parity::kEven;
        for_each_fpl(*n, parity, [&](const FplConfig& c) { sink.out() << to_json(c).dump() << "\n"; });
      } else if (kind == "tilings") {
        if (!region) throw UsageError("enumerate tilings needs --region");
        for_each_tiling(build_special(*region), [&](const Tiling& t) { sink.out() << to_json(t).dump() << "\n"; });
      } else {
        if (!lambda) throw UsageError("enumerate ssyt needs --lambda");
        const int bound = max ? *max : n ? *n : 0;
        if (bound < 1) throw UsageError("enumerate ssyt needs --max");
        for_each_ssyt(*lambda, bound, [&](const Ssyt& t) { sink.out() << to_json(t).dump() << "\n"; });
      }
      return kExitPass;
    }

    if (w->parsed()) {
      if (!n) throw UsageError("wieland needs --n");
      const WielandReport rep = wieland_check(*n, max_n.value_or(6), threads);
      Json viol = Json::array();
      for (const auto& x : rep.violations) {
        viol.push_back(Json{{"pattern", to_json(x.pattern)}, {"count", num(x.count)},
                            {"rotated_count", num(x.rotated_count)}});
      }
      Sink sink(output);
      sink.out() << Json{{"n", num(rep.n)},
                         {"matchings", num(rep.matchings_checked)},
                         {"total_even", num(rep.total_even)},
                         {"total_odd", num(rep.total_odd)},
                         {"violations", viol},
                         {"pass", rep.pass()}}
                        .dump(2)
                 << "\n";
      return rep.pass() ? kExitPass : kExitFail;
    }
  } catch (const GuardExceeded& g) {
    std::cerr << "guard exceeded: " << g.what() << "\n";
    return kExitSkip;
  } catch (const UsageError& u) {
    std::cerr << "error: " << u.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& d) {
    std::cerr << "error: " << d.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& i) {
    std::cerr << "internal error: " << i.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
