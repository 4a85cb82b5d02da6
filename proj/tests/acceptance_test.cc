// Copyright 2026 The trimatch Authors
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. With --update-golden it only rewrites the
// golden CLI outputs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trimatch/cli.h"
#include "trimatch/conjectures.h"
#include "trimatch/constructions.h"
#include "trimatch/graphcore.h"
#include "trimatch/oracle.h"
#include "trimatch/solver.h"

namespace {

namespace fs = std::filesystem;
using namespace trimatch;
using Clock = std::chrono::steady_clock;

bool update_golden = false;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void Budget(Outcome& o, Clock::time_point start, double limit) {
  const double s = Seconds(start);
  if (s > limit) {
    o.Fail("took " + std::to_string(s) + " s, budget " + std::to_string(limit) + " s");
  }
}

// Every instance on 2n <= 8 vertices in multigraph mode, every target with
// sum <= n-2; the solver's answer is validated and the oracle must agree.
Outcome SolverExhaustive() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t cases = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<Distribution> targets;
    for (int s = 0; s <= n - 2; ++s) {
      for (const Distribution& t : Compositions(s, 3)) targets.push_back(t);
    }
    ForEachTripleInstance(
        n, false, Shard{}, [&](std::int64_t, const std::vector<std::vector<Vertex>>& p) {
          const Instance g = Instance::FromPartners(n, false, p);
          for (const Distribution& t : targets) {
            ++cases;
            const Matching m = FindMatching(g, t);
            if (!ValidateMatching(g, m).empty() || ComputeDistribution(g, m) != t) {
              o.Fail("solver failed on " + t.ToString() + " " + SerializeInstance(g));
            }
            if (!ExistsExact(g, t).has_value()) {
              o.Fail("oracle missed " + t.ToString() + " " + SerializeInstance(g));
            }
          }
        });
  }
  Budget(o, start, 300);
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome SolverAtScale() {
  Outcome o;
  const int n = 500;
  std::mt19937_64 rng(20261014);
  int worst_swaps = 0;
  double worst_seconds = 0;
  for (int run = 0; run < 100; ++run) {
    const Instance g = RandomInstance(n, 3, 1000 + run, run % 2 == 1);
    std::uniform_int_distribution<int> cut(0, n - 2);
    int a = cut(rng), b = cut(rng);
    if (a > b) std::swap(a, b);
    const Distribution target({a, b - a, n - 2 - b});
    const auto start = Clock::now();
    SolveStats stats;
    const Matching m = FindMatching(g, target, &stats);
    const double s = Seconds(start);
    worst_seconds = std::max(worst_seconds, s);
    worst_swaps = std::max(worst_swaps, stats.max_swaps_per_shift);
    if (s > 10) o.Fail("run " + std::to_string(run) + " took " + std::to_string(s) + " s");
    if (!ValidateMatching(g, m).empty() || ComputeDistribution(g, m) != target) {
      o.Fail("run " + std::to_string(run) + " produced a wrong matching");
    }
    if (stats.max_swaps_per_shift > n) o.Fail("swap bound exceeded");
  }
  if (o.pass) {
    o.detail = "100 runs, slowest " + std::to_string(worst_seconds) +
               " s, max swaps per shift " + std::to_string(worst_swaps);
  }
  return o;
}

Outcome CyclicNoPerfectMatching() {
  Outcome o;
  const auto start = Clock::now();
  int vectors = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (!(n > k || (n == k && n % 2 == 0))) continue;
      for (const Distribution& mult : Compositions(n, k)) {
        bool in_range = true;
        for (int a : mult.counts()) in_range = in_range && a <= n - 1;
        if (!in_range) continue;
        ++vectors;
        try {
          const ShiftVector shifts = ChooseShifts(n, mult);
          if (ExistsExact(CyclicConstruction(shifts), mult).has_value()) {
            o.Fail("perfect matching found for " + mult.ToString());
          }
        } catch (const std::exception& e) {
          o.Fail(mult.ToString() + ": " + e.what());
        }
      }
    }
  }
  Budget(o, start, 120);
  if (o.pass) o.detail = std::to_string(vectors) + " multiplicity vectors";
  return o;
}

// On disjoint K4 blocks a distribution of size s is achievable exactly when
// s + #odd <= n; all-odd triples summing to n-1 are therefore missing.
Outcome K4ParityBound() {
  Outcome o;
  const auto start = Clock::now();
  for (int n : {4, 6}) {
    const Instance g = K4Construction(n);
    for (int size = 0; size <= n; ++size) {
      const RealizabilityReport r = AchievableDistributions(g, size);
      for (const Distribution& d : Compositions(size, 3)) {
        int odd = 0;
        for (int a : d.counts()) odd += a % 2;
        const bool achievable = r.achievable.count(d) > 0;
        if (achievable != (size + odd <= n)) {
          o.Fail("n=" + std::to_string(n) + " " + d.ToString());
        }
      }
    }
    for (const Distribution& d : Compositions(n - 1, 3)) {
      if (d[0] % 2 && d[1] % 2 && d[2] % 2 && ExistsExact(g, d).has_value()) {
        o.Fail("all-odd " + d.ToString() + " achievable at n=" + std::to_string(n));
      }
    }
  }
  Budget(o, start, 60);
  if (o.pass) o.detail = "exact on n = 4 and n = 6";
  return o;
}

Outcome LatinMultiplicities() {
  Outcome o;
  const auto start = Clock::now();
  CheckOptions options;
  options.workers = 4;
  std::int64_t cases = 0;
  for (int order = 1; order <= 5; ++order) {
    const SearchVerdict v = CheckRyserMultiplicity(order, true, options);
    cases += v.cases_checked;
    if (!v.pass()) o.Fail(FormatVerdict(v));
    if (order == 5 && (v.instances_checked != 56 || v.cases_checked != 56 * 70)) {
      o.Fail("order 5 covered " + std::to_string(v.instances_checked) + " squares, " +
             std::to_string(v.cases_checked) + " cases");
    }
  }
  Budget(o, start, 600);
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome ThreeColourSearch() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t instances = 0;
  for (int n = 2; n <= 6; ++n) {
    const SearchVerdict whole = CheckConjectureThree(n, true);
    instances += whole.instances_checked;
    if (!whole.pass()) o.Fail(FormatVerdict(whole));
    std::vector<SearchVerdict> parts;
    for (int i = 0; i < 4; ++i) {
      CheckOptions options;
      options.shard = {i, 4};
      parts.push_back(CheckConjectureThree(n, true, options));
    }
    if (!MergeVerdicts(parts).SameOutcome(whole)) {
      o.Fail("4-shard verdict differs at n=" + std::to_string(n));
    }
  }
  Budget(o, start, 1800);
  if (o.pass) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome AbelianGroups() {
  Outcome o;
  int groups = 0;
  for (int order = 1; order <= 8; ++order) {
    for (const std::vector<int>& factors : CyclicFactorizations(order)) {
      ++groups;
      const SearchVerdict v = CheckAbelianHall(factors);
      if (!v.pass()) o.Fail(FormatVerdict(v));
    }
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups";
  return o;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Scenario {
  std::string name;
  std::vector<std::string> args;  // "@" expands to the working directory
};

// Runs every scenario in `dir`; returns file name -> contents, stdout
// included as <name>.stdout.
std::vector<std::pair<std::string, std::string>> RunScenarios(
    const std::vector<Scenario>& scenarios, const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const Scenario& s : scenarios) {
    std::vector<std::string> args = {"trimatch"};
    for (const std::string& a : s.args) {
      args.push_back(a.rfind("@", 0) == 0 ? (dir / a.substr(1)).string() : a);
    }
    std::ostringstream out, err;
    const int code = trimatch::cli::Run(args, out, err);
    files.push_back({s.name + ".stdout", out.str() + "exit " + std::to_string(code) + "\n"});
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    files.push_back({entry.path().filename().string(), Slurp(entry.path())});
  }
  std::sort(files.begin(), files.end());
  return files;
}

Outcome CliDeterminism() {
  Outcome o;
  const std::vector<Scenario> scenarios = {
      {"gen_k4", {"gen", "k4", "--n", "4", "--out", "@k4_n4.json"}},
      {"gen_cyclic", {"gen", "cyclic", "--n", "7", "--mult", "3,2,2", "--out",
                      "@cyclic_n7.json"}},
      {"gen_latin", {"gen", "latin", "--order", "4", "--index", "2", "--reduced",
                     "--out", "@latin4.json"}},
      {"gen_cayley", {"gen", "cayley", "--factors", "2,4", "--out", "@cayley_2_4.json"}},
      {"gen_random", {"gen", "random", "--n", "40", "--seed", "9", "--out",
                      "@random_n40.json"}},
      {"gen_random_k5", {"gen", "random", "--n", "10", "--seed", "2", "--k", "5",
                         "--bipartite", "--out", "@random_k5.json"}},
      {"solve_random", {"solve", "--input", "@random_n40.json", "--target", "13,12,13",
                        "--out", "@solve_random.json"}},
      {"solve_k4", {"solve", "--input", "@k4_n4.json", "--target", "1,1,0", "--json",
                    "--out", "@solve_k4.json"}},
      {"oracle_report", {"oracle", "--input", "@k4_n4.json", "--report", "--size", "3",
                         "--json", "--out", "@report_k4.json"}},
      {"oracle_cyclic", {"oracle", "--input", "@cyclic_n7.json", "--target", "3,2,2"}},
      {"oracle_witness", {"oracle", "--input", "@latin4.json", "--target", "2,0,1,0",
                          "--out", "@witness_latin4.json"}},
      {"check_conj3", {"check", "conj3", "--n", "4", "--out", "@conj3_n4.json"}},
      {"check_ryser", {"check", "ryser", "--order", "4", "--workers", "2", "--out",
                       "@ryser4.json"}},
      {"check_abelian", {"check", "abelian", "--factors", "2,2", "--shard", "1/2",
                         "--json", "--out", "@abelian_2_2.json"}},
      {"validate", {"validate", "--input", "@random_k5.json"}},
  };
  const fs::path base = fs::temp_directory_path() / "trimatch_acceptance";
  fs::remove_all(base);
  fs::create_directories(base / "a");
  fs::create_directories(base / "b");
  const auto first = RunScenarios(scenarios, base / "a");
  const auto second = RunScenarios(scenarios, base / "b");
  fs::remove_all(base);
  if (first != second) o.Fail("two runs differ");

  const fs::path golden = TRIMATCH_GOLDEN_DIR;
  int compared = 0;
  for (const auto& [name, contents] : first) {
    const fs::path path = golden / name;
    if (update_golden) {
      std::ofstream(path, std::ios::binary) << contents;
      continue;
    }
    if (!fs::exists(path)) {
      o.Fail("missing golden file " + name);
      continue;
    }
    ++compared;
    if (Slurp(path) != contents) o.Fail("golden mismatch: " + name);
  }
  if (o.pass) {
    o.detail = std::to_string(scenarios.size()) + " scenarios, " +
               std::to_string(compared) + " golden files";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--update-golden") update_golden = true;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 three-colour solver, all multigraphs on <= 8 vertices", SolverExhaustive},
      {"AC2 three-colour solver at n = 500", SolverAtScale},
      {"AC3 cyclic constructions without the full-size matching", CyclicNoPerfectMatching},
      {"AC4 parity bound on K4 blocks", K4ParityBound},
      {"AC5 reduced Latin squares of order <= 5", LatinMultiplicities},
      {"AC6 simple three-colour instances on <= 12 vertices", ThreeColourSearch},
      {"AC7 abelian groups of order <= 8", AbelianGroups},
      {"AC8 CLI determinism and golden files", CliDeterminism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (update_golden && name.rfind("AC8", 0) != 0) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << "; "
              << Seconds(start) << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
