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

#include "trimatch/cli.h"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "trimatch/conjectures.h"
#include "trimatch/constructions.h"
#include "trimatch/graphcore.h"
#include "trimatch/oracle.h"
#include "trimatch/solver.h"

namespace trimatch::cli {
namespace {

bool GuardOverride() {
  const char* value = std::getenv("TRIMATCH_GUARD_OVERRIDE");
  return value != nullptr && std::string(value) == "1";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
}

// Writes machine output to --out when given, otherwise to the output stream.
void Emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    WriteFile(path, contents);
  }
}

std::vector<int> ParseList(const std::string& text) {
  return ParseDistribution(text).counts();
}

struct Options {
  std::string input;
  std::string out;
  std::string target;
  bool json = false;

  // gen
  int n = 0;
  std::string mult;
  std::string shifts;
  int order = 0;
  long index = 0;
  bool reduced = false;
  std::string factors;
  std::uint64_t seed = 0;
  bool bipartite = false;
  int k = 3;

  // oracle
  int size = -1;
  bool report = false;
  bool size_from_target = false;

  // check
  bool multigraph = false;
  bool all_squares = false;
  std::string shard = "0/1";
  int workers = 1;
  bool timing = false;
};

int Solve(const Options& o, std::ostream& out) {
  const Instance instance = ParseInstance(ReadFile(o.input));
  const Distribution target = ParseDistribution(o.target);
  const Matching m = FindMatching(instance, target);
  const std::string text = SerializeMatching(m);
  if (!o.out.empty()) WriteFile(o.out, text);
  if (o.json) {
    out << text;
  } else {
    out << "matching with distribution "
        << ComputeDistribution(instance, m).ToString() << ", " << m.size()
        << " edges\n";
  }
  return kExitOk;
}

int Generate(const std::string& kind, const Options& o, std::ostream& out) {
  std::optional<Instance> instance;
  if (kind == "cyclic") {
    ShiftVector shifts;
    if (!o.shifts.empty()) {
      shifts = {o.n, ParseList(o.shifts)};
    } else if (!o.mult.empty()) {
      shifts = ChooseShifts(o.n, ParseDistribution(o.mult));
    } else {
      throw Error(ErrorCode::kRange, "gen cyclic needs --mult or --shifts");
    }
    instance = CyclicConstruction(shifts);
  } else if (kind == "k4") {
    instance = K4Construction(o.n);
  } else if (kind == "latin") {
    if (o.index < 0) throw Error(ErrorCode::kRange, "index must be >= 0");
    std::optional<LatinSquare> chosen;
    long seen = 0;
    ForEachLatinSquare(
        o.order, o.reduced,
        [&](const LatinSquare& s) {
          if (seen++ == o.index) chosen = s;
        },
        GuardOverride());
    if (!chosen) {
      throw Error(ErrorCode::kRange, "index " + std::to_string(o.index) +
                                         " out of range (" +
                                         std::to_string(seen) + " squares)");
    }
    instance = LatinToInstance(*chosen);
  } else if (kind == "cayley") {
    instance = LatinToInstance(CayleyTable(ParseList(o.factors)));
  } else {
    instance = RandomInstance(o.n, o.k, o.seed, o.bipartite);
  }
  Emit(o.out, SerializeInstance(*instance), out);
  return kExitOk;
}

int RunOracle(const Options& o, std::ostream& out) {
  const Instance instance = ParseInstance(ReadFile(o.input));
  OracleLimits limits;
  limits.override_guard = GuardOverride();
  std::optional<Distribution> target;
  if (!o.target.empty()) target = ParseDistribution(o.target);

  if (o.report || o.size >= 0) {
    int size = o.size;
    if (size < 0) {
      if (!target) throw Error(ErrorCode::kRange, "--report needs --size or --target");
      size = target->total();
    }
    RealizabilityReport report = AchievableDistributions(instance, size, limits);
    if (target) {
      report.queried = target;
      report.queried_found = report.achievable.count(*target) > 0;
    }
    const std::string json = SerializeReport(report);
    if (!o.out.empty()) WriteFile(o.out, json);
    out << (o.json ? json : FormatReportTable(report));
    return (target && !report.queried_found) ? kExitNegative : kExitOk;
  }
  if (!target) throw Error(ErrorCode::kRange, "oracle needs --target or --report");
  const std::optional<Matching> witness = ExistsExact(instance, *target, limits);
  if (witness && !o.out.empty()) WriteFile(o.out, SerializeMatching(*witness));
  if (o.json) {
    out << (witness ? SerializeMatching(*witness) : std::string("null\n"));
  } else {
    out << target->ToString() << ": " << (witness ? "found" : "not found") << '\n';
  }
  return witness ? kExitOk : kExitNegative;
}

int RunCheck(const std::string& kind, const Options& o, std::ostream& out) {
  CheckOptions options;
  options.shard = ParseShard(o.shard);
  options.workers = o.workers;
  options.override_guard = GuardOverride();
  if (o.workers < 1) throw Error(ErrorCode::kRange, "--workers must be >= 1");
  SearchVerdict verdict;
  if (kind == "conj3") {
    verdict = CheckConjectureThree(o.n, !o.multigraph, options);
  } else if (kind == "ryser") {
    verdict = CheckRyserMultiplicity(o.order, !o.all_squares, options);
  } else {
    verdict = CheckAbelianHall(ParseList(o.factors), options);
  }
  const std::string json = SerializeVerdict(verdict, o.timing);
  if (!o.out.empty()) WriteFile(o.out, json);
  if (o.json) {
    out << json;
  } else {
    out << FormatVerdict(verdict);
    if (o.timing) out << "elapsed " << verdict.elapsed_seconds << " s\n";
  }
  return verdict.pass() ? kExitOk : kExitCounterexample;
}

int RunValidate(const Options& o, std::ostream& out) {
  const Instance instance = ParseInstance(ReadFile(o.input));
  const std::vector<Violation> violations = Validate(instance);
  if (violations.empty()) {
    out << "ok\n";
    return kExitOk;
  }
  for (const Violation& v : violations) out << v.message << '\n';
  return kExitUsage;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact colour-multiplicity matchings in unions of perfect matchings",
               "trimatch"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "construct a matching with a given distribution");
  solve->add_option("--input", o.input, "instance file")->required();
  solve->add_option("--target", o.target, "a1,a2,a3")->required();
  solve->add_option("--out", o.out, "matching file to write");
  solve->add_flag("--json", o.json, "print the matching file");

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance");
  gen->require_subcommand(1);
  CLI::App* cyclic = gen->add_subcommand("cyclic", "cyclic sum construction");
  cyclic->add_option("--n", o.n)->required();
  auto* mult = cyclic->add_option("--mult", o.mult, "multiplicities summing to n");
  auto* shifts = cyclic->add_option("--shifts", o.shifts, "explicit residues");
  mult->excludes(shifts);
  CLI::App* k4 = gen->add_subcommand("k4", "disjoint K4 blocks");
  k4->add_option("--n", o.n)->required();
  CLI::App* latin = gen->add_subcommand("latin", "Latin square by enumeration index");
  latin->add_option("--order", o.order)->required();
  latin->add_option("--index", o.index)->required();
  latin->add_flag("--reduced", o.reduced, "index into reduced squares only");
  CLI::App* cayley = gen->add_subcommand("cayley", "abelian group addition table");
  cayley->add_option("--factors", o.factors, "cyclic factor orders, e.g. 2,2")->required();
  CLI::App* random = gen->add_subcommand("random", "random perfect matchings");
  random->add_option("--n", o.n)->required();
  random->add_option("--seed", o.seed)->required();
  random->add_option("--k", o.k, "number of colours");
  random->add_flag("--bipartite", o.bipartite);
  for (CLI::App* sub : {cyclic, k4, latin, cayley, random}) {
    sub->add_option("--out", o.out, "instance file to write");
  }

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force existence or full report");
  oracle->add_option("--input", o.input, "instance file")->required();
  oracle->add_option("--target", o.target, "a1,...,ak");
  oracle->add_option("--size", o.size, "matching size for --report");
  oracle->add_flag("--report", o.report, "list every achievable distribution");
  oracle->add_flag("--size-from-target", o.size_from_target,
                   "use the target sum as the matching size (default)");
  oracle->add_option("--out", o.out, "witness or report file to write");
  oracle->add_flag("--json", o.json, "machine-readable output");

  CLI::App* check = app.add_subcommand("check", "exhaustive conjecture searches");
  check->require_subcommand(1);
  CLI::App* conj3 = check->add_subcommand("conj3", "three-colour sum n-1 statement");
  conj3->add_option("--n", o.n)->required();
  conj3->add_flag("--multigraph", o.multigraph, "allow parallel edges (exploratory)");
  CLI::App* ryser = check->add_subcommand("ryser", "Latin square multiplicities");
  ryser->add_option("--order", o.order)->required();
  ryser->add_flag("--all-squares", o.all_squares, "enumerate all squares, not only reduced");
  CLI::App* abelian = check->add_subcommand("abelian", "abelian group addition tables");
  abelian->add_option("--factors", o.factors)->required();
  for (CLI::App* sub : {conj3, ryser, abelian}) {
    sub->add_option("--shard", o.shard, "i/m: process indices = i mod m");
    sub->add_option("--workers", o.workers, "worker threads");
    sub->add_option("--out", o.out, "verdict file to write");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_flag("--timing", o.timing, "include elapsed time in the verdict");
  }

  CLI::App* validate = app.add_subcommand("validate", "check instance invariants");
  validate->add_option("--input", o.input, "instance file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "trimatch: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return Solve(o, out);
    if (oracle->parsed()) return RunOracle(o, out);
    if (validate->parsed()) return RunValidate(o, out);
    for (CLI::App* sub : {cyclic, k4, latin, cayley, random}) {
      if (sub->parsed()) return Generate(sub->get_name(), o, out);
    }
    for (CLI::App* sub : {conj3, ryser, abelian}) {
      if (sub->parsed()) return RunCheck(sub->get_name(), o, out);
    }
  } catch (const Error& e) {
    err << "trimatch: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  err << "trimatch: no command\n";
  return kExitUsage;
}

}  // namespace trimatch::cli
