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

#include "trimatch/conjectures.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "trimatch/oracle.h"

namespace trimatch {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `work` once per worker, worker w taking the refinement of `shard`
// that owns indices congruent to shard.index + w * shard.count modulo
// shard.count * workers.
SearchVerdict RunSharded(const CheckOptions& options,
                         const std::function<SearchVerdict(const Shard&)>& work) {
  const int workers = std::max(1, options.workers);
  if (workers == 1) return work(options.shard);
  std::vector<SearchVerdict> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        parts[w] = work(Shard{options.shard.index + w * options.shard.count,
                              options.shard.count * workers});
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return MergeVerdicts(parts);
}

// Confirms every composition missing from `seen` with a fresh exact search.
void ConfirmMissing(const Instance& instance,
                    const std::vector<Distribution>& targets,
                    const std::vector<char>& seen, int size,
                    SearchVerdict& verdict) {
  OracleLimits limits;
  limits.override_guard = true;
  for (const Distribution& target : targets) {
    if (seen[DistributionCode(target, size)]) continue;
    if (ExistsExact(instance, target, limits)) {
      throw std::logic_error("scan and exact search disagree on " +
                             target.ToString());
    }
    verdict.counterexamples.push_back({instance, target});
  }
}

// Component test on raw partner arrays; `scratch` must hold 2n entries.
bool HasNonK4ComponentRaw(int n, int k, const Vertex* partners,
                          std::vector<Vertex>& scratch) {
  const int vertices = 2 * n;
  std::vector<Vertex>& root = scratch;
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (int c = 0; c < k; ++c) {
    for (Vertex v = 0; v < vertices; ++v) {
      const Vertex a = find(v), b = find(partners[c * vertices + v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  }
  // Components are labelled by their smallest vertex after full compression.
  std::vector<int> count(vertices, 0);
  for (Vertex v = 0; v < vertices; ++v) ++count[find(v)];
  for (Vertex v = 0; v < vertices; ++v) {
    if (find(v) != v) continue;
    if (count[v] != 4) return true;
    if (k != 3) return true;
    // The pairing of a 4-set is fixed by the partner of its smallest vertex.
    const Vertex p1 = partners[v], p2 = partners[vertices + v],
                 p3 = partners[2 * vertices + v];
    if (p1 == p2 || p1 == p3 || p2 == p3) return true;
  }
  return false;
}

void LatinBacktrack(int order, bool reduced, std::vector<std::vector<int>>& cells,
                    std::vector<unsigned>& row_used,
                    std::vector<unsigned>& column_used, int cell,
                    const std::function<void(const LatinSquare&)>& visit) {
  if (cell == order * order) {
    visit(LatinSquare(cells));
    return;
  }
  const int i = cell / order, j = cell % order;
  int low = 0, high = order - 1;
  if (reduced && (i == 0 || j == 0)) low = high = (i == 0 ? j : i);
  for (int s = low; s <= high; ++s) {
    const unsigned bit = 1u << s;
    if ((row_used[i] & bit) || (column_used[j] & bit)) continue;
    row_used[i] |= bit;
    column_used[j] |= bit;
    cells[i][j] = s;
    LatinBacktrack(order, reduced, cells, row_used, column_used, cell + 1, visit);
    row_used[i] &= ~bit;
    column_used[j] &= ~bit;
  }
}

// Pairs up the free vertices of `mate` in every way, skipping pairs rejected
// by `allowed`. Calls done() for each complete pairing.
template <typename Allowed, typename Done>
void PairUp(std::vector<Vertex>& mate, Allowed allowed, Done done) {
  const Vertex vertices = static_cast<Vertex>(mate.size());
  Vertex v = 0;
  while (v < vertices && mate[v] != kNoVertex) ++v;
  if (v == vertices) {
    done();
    return;
  }
  for (Vertex w = v + 1; w < vertices; ++w) {
    if (mate[w] != kNoVertex || !allowed(v, w)) continue;
    mate[v] = w;
    mate[w] = v;
    PairUp(mate, allowed, done);
    mate[v] = mate[w] = kNoVertex;
  }
}

void CompositionsInto(int total, int parts, std::vector<int>& prefix,
                      std::vector<Distribution>& out) {
  if (static_cast<int>(prefix.size()) == parts - 1) {
    prefix.push_back(total);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    prefix.push_back(a);
    CompositionsInto(total - a, parts, prefix, out);
    prefix.pop_back();
  }
}

void FactorizationsFrom(int remaining, int smallest, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 1) {
    out.push_back(prefix);
    return;
  }
  for (int f = smallest; f <= remaining; ++f) {
    if (remaining % f != 0) continue;
    prefix.push_back(f);
    FactorizationsFrom(remaining / f, f, prefix, out);
    prefix.pop_back();
  }
}

std::string FactorName(const std::vector<int>& factors) {
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " x ";
    out += "Z_" + std::to_string(factors[i]);
  }
  return out;
}

// Checks every target on one instance: scan when the code space is small,
// otherwise one exact search per target.
void CheckAllTargets(const Instance& instance,
                     const std::vector<Distribution>& targets, int size,
                     SearchVerdict& verdict) {
  long space = 1;
  for (int c = 0; c < instance.colour_count(); ++c) {
    space *= size + 1;
    if (space > (1L << 26)) break;
  }
  if (space <= (1L << 26)) {
    std::vector<char> seen;
    const PartnerTableView view{instance.half_order(), instance.colour_count(),
                                instance.partner_table()};
    // Stop only once every composition of `size` has appeared, since
    // `targets` may be a shard's subset.
    const int all = static_cast<int>(
        Compositions(size, instance.colour_count()).size());
    if (ScanDistributions(view, size, all, seen) < all) {
      ConfirmMissing(instance, targets, seen, size, verdict);
    }
    return;
  }
  OracleLimits limits;
  limits.override_guard = true;
  for (const Distribution& target : targets) {
    if (!ExistsExact(instance, target, limits)) {
      verdict.counterexamples.push_back({instance, target});
    }
  }
}

}  // namespace

Shard ParseShard(std::string_view text) {
  const size_t slash = text.find('/');
  Shard shard;
  bool ok = slash != std::string_view::npos;
  if (ok) {
    auto a = std::from_chars(text.data(), text.data() + slash, shard.index);
    auto b = std::from_chars(text.data() + slash + 1, text.data() + text.size(),
                             shard.count);
    ok = a.ec == std::errc() && a.ptr == text.data() + slash &&
         b.ec == std::errc() && b.ptr == text.data() + text.size() &&
         shard.count >= 1 && shard.index >= 0 && shard.index < shard.count;
  }
  if (!ok) {
    throw Error(ErrorCode::kParse,
                "shard must be i/m with 0 <= i < m, got '" + std::string(text) + "'");
  }
  return shard;
}

bool SearchVerdict::SameOutcome(const SearchVerdict& other) const {
  return check == other.check && scope == other.scope && mode == other.mode &&
         instances_checked == other.instances_checked &&
         cases_checked == other.cases_checked &&
         counterexamples == other.counterexamples;
}

SearchVerdict MergeVerdicts(const std::vector<SearchVerdict>& parts) {
  if (parts.empty()) throw Error(ErrorCode::kRange, "nothing to merge");
  SearchVerdict out;
  out.check = parts.front().check;
  out.scope = parts.front().scope;
  out.mode = parts.front().mode;
  for (const SearchVerdict& p : parts) {
    if (p.check != out.check || p.scope != out.scope || p.mode != out.mode) {
      throw Error(ErrorCode::kPrecondition,
                  "cannot merge verdicts of different searches");
    }
    out.instances_checked += p.instances_checked;
    out.cases_checked += p.cases_checked;
    out.counterexamples.insert(out.counterexamples.end(),
                               p.counterexamples.begin(),
                               p.counterexamples.end());
    out.elapsed_seconds = std::max(out.elapsed_seconds, p.elapsed_seconds);
  }
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  return out;
}

std::string SerializeVerdict(const SearchVerdict& verdict, bool include_timing) {
  nlohmann::json doc;
  doc["check"] = verdict.check;
  doc["scope"] = verdict.scope;
  doc["mode"] = verdict.mode;
  doc["instances_checked"] = verdict.instances_checked;
  doc["cases_checked"] = verdict.cases_checked;
  doc["verdict"] = verdict.pass() ? "pass" : "counterexample";
  nlohmann::json list = nlohmann::json::array();
  for (const Counterexample& c : verdict.counterexamples) {
    list.push_back({{"instance", nlohmann::json::parse(SerializeInstance(c.instance))},
                    {"target", c.target.counts()}});
  }
  doc["counterexamples"] = std::move(list);
  if (include_timing) doc["elapsed_seconds"] = verdict.elapsed_seconds;
  return doc.dump() + "\n";
}

std::string FormatVerdict(const SearchVerdict& verdict) {
  std::ostringstream out;
  out << verdict.check << " [" << verdict.scope << "; " << verdict.mode
      << "]: " << (verdict.pass() ? "pass" : "COUNTEREXAMPLE") << ", "
      << verdict.instances_checked << " instances, " << verdict.cases_checked
      << " cases, " << verdict.counterexamples.size() << " counterexamples\n";
  for (const Counterexample& c : verdict.counterexamples) {
    out << "  target " << c.target.ToString() << " on "
        << SerializeInstance(c.instance);
  }
  return out.str();
}

std::vector<Distribution> Compositions(int total, int parts) {
  if (total < 0 || parts < 1) {
    throw Error(ErrorCode::kRange, "need total >= 0 and parts >= 1");
  }
  std::vector<Distribution> out;
  std::vector<int> prefix;
  CompositionsInto(total, parts, prefix, out);
  return out;
}

void ForEachLatinSquare(int order, bool reduced,
                        const std::function<void(const LatinSquare&)>& visit,
                        bool override_guard) {
  if (order < 1) throw Error(ErrorCode::kRange, "order must be >= 1");
  if (order > 31 || (!override_guard && order > kMaxLatinOrder)) {
    throw Error(ErrorCode::kRange, "Latin square enumeration is limited to order " +
                                       std::to_string(kMaxLatinOrder));
  }
  std::vector<std::vector<int>> cells(order, std::vector<int>(order, 0));
  std::vector<unsigned> row_used(order, 0), column_used(order, 0);
  LatinBacktrack(order, reduced, cells, row_used, column_used, 0, visit);
}

std::vector<LatinSquare> EnumerateLatinSquares(int order, bool reduced,
                                               bool override_guard) {
  std::vector<LatinSquare> out;
  ForEachLatinSquare(
      order, reduced, [&](const LatinSquare& s) { out.push_back(s); },
      override_guard);
  return out;
}

void ForEachTripleInstance(int n, bool simple_only, const Shard& shard,
                           const TripleVisitor& visit) {
  if (n < 1) throw Error(ErrorCode::kRange, "n must be >= 1");
  const int vertices = 2 * n;
  std::vector<std::vector<Vertex>> partners(3, std::vector<Vertex>(vertices, kNoVertex));
  for (Vertex v = 0; v < vertices; ++v) partners[0][v] = v ^ 1;
  std::int64_t index = 0;
  const std::vector<Vertex>& first = partners[0];
  std::vector<Vertex>& second = partners[1];
  std::vector<Vertex>& third = partners[2];
  PairUp(
      second,
      [&](Vertex v, Vertex w) { return !simple_only || first[v] != w; },
      [&] {
        PairUp(
            third,
            [&](Vertex v, Vertex w) {
              return !simple_only || (first[v] != w && second[v] != w);
            },
            [&] {
              if (shard.Owns(index)) visit(index, partners);
              ++index;
            });
      });
}

std::vector<Instance> EnumerateTripleInstances(int n, bool simple_only) {
  std::vector<Instance> out;
  ForEachTripleInstance(n, simple_only, Shard{},
                        [&](std::int64_t, const std::vector<std::vector<Vertex>>& p) {
                          out.push_back(Instance::FromPartners(n, false, p));
                        });
  return out;
}

bool HasNonK4Component(const Instance& instance) {
  std::vector<Vertex> scratch(instance.vertex_count());
  return HasNonK4ComponentRaw(instance.half_order(), instance.colour_count(),
                              instance.partner_table().data(), scratch);
}

SearchVerdict CheckConjectureThree(int n, bool simple_only,
                                   const CheckOptions& options) {
  if (n < 1) throw Error(ErrorCode::kRange, "n must be >= 1");
  if (!options.override_guard && n > kMaxConjectureThreeHalfOrder) {
    throw Error(ErrorCode::kRange,
                "three-colour search is limited to n <= " +
                    std::to_string(kMaxConjectureThreeHalfOrder));
  }
  const std::vector<Distribution> targets = Compositions(n - 1, 3);
  const int size = n - 1;
  const int vertices = 2 * n;
  return RunSharded(options, [&](const Shard& shard) {
    const auto start = Clock::now();
    SearchVerdict verdict;
    verdict.check = "conj3";
    verdict.scope = "n=" + std::to_string(n) + ", canonical M_1, sum n-1, "
                    "instances with a non-K4 component";
    verdict.mode = simple_only ? "simple" : "multigraph (exploratory)";
    std::vector<Vertex> flat(3 * vertices);
    std::vector<Vertex> scratch(vertices);
    std::vector<char> seen;
    ForEachTripleInstance(
        n, simple_only, shard,
        [&](std::int64_t, const std::vector<std::vector<Vertex>>& partners) {
          for (int c = 0; c < 3; ++c) {
            std::copy(partners[c].begin(), partners[c].end(),
                      flat.begin() + c * vertices);
          }
          if (!HasNonK4ComponentRaw(n, 3, flat.data(), scratch)) return;
          ++verdict.instances_checked;
          verdict.cases_checked += static_cast<std::int64_t>(targets.size());
          const PartnerTableView view{n, 3, flat};
          const int found = ScanDistributions(
              view, size, static_cast<int>(targets.size()), seen);
          if (found < static_cast<int>(targets.size())) {
            ConfirmMissing(Instance::FromPartners(n, false, partners), targets,
                           seen, size, verdict);
          }
        });
    std::sort(verdict.counterexamples.begin(), verdict.counterexamples.end());
    verdict.elapsed_seconds = SecondsSince(start);
    return verdict;
  });
}

SearchVerdict CheckRyserMultiplicity(int order, bool reduced_only,
                                     const CheckOptions& options) {
  if (order < 1) throw Error(ErrorCode::kRange, "order must be >= 1");
  if (!options.override_guard && order > kMaxLatinOrder) {
    throw Error(ErrorCode::kRange, "Latin square search is limited to order " +
                                       std::to_string(kMaxLatinOrder));
  }
  const std::vector<Distribution> targets = Compositions(order - 1, order);
  return RunSharded(options, [&](const Shard& shard) {
    const auto start = Clock::now();
    SearchVerdict verdict;
    verdict.check = "ryser";
    verdict.scope = "order=" + std::to_string(order) + ", sum order-1";
    verdict.mode = reduced_only ? "reduced squares" : "all squares";
    std::int64_t index = 0;
    ForEachLatinSquare(
        order, reduced_only,
        [&](const LatinSquare& square) {
          if (shard.Owns(index++)) {
            ++verdict.instances_checked;
            verdict.cases_checked += static_cast<std::int64_t>(targets.size());
            CheckAllTargets(LatinToInstance(square), targets, order - 1, verdict);
          }
        },
        options.override_guard);
    std::sort(verdict.counterexamples.begin(), verdict.counterexamples.end());
    verdict.elapsed_seconds = SecondsSince(start);
    return verdict;
  });
}

SearchVerdict CheckAbelianHall(const std::vector<int>& factors,
                               const CheckOptions& options) {
  const LatinSquare table = CayleyTable(factors);
  const int order = table.order();
  if (!options.override_guard && order > kMaxAbelianOrder) {
    throw Error(ErrorCode::kRange, "abelian group search is limited to order " +
                                       std::to_string(kMaxAbelianOrder));
  }
  const Instance instance = LatinToInstance(table);
  const std::vector<Distribution> all = Compositions(order - 1, order);
  return RunSharded(options, [&](const Shard& shard) {
    const auto start = Clock::now();
    SearchVerdict verdict;
    verdict.check = "abelian";
    verdict.scope = FactorName(factors) + ", sum order-1";
    verdict.mode = "addition table";
    std::vector<Distribution> owned;
    for (size_t i = 0; i < all.size(); ++i) {
      if (shard.Owns(static_cast<std::int64_t>(i))) owned.push_back(all[i]);
    }
    if (shard.Owns(0)) verdict.instances_checked = 1;
    verdict.cases_checked = static_cast<std::int64_t>(owned.size());
    if (!owned.empty()) CheckAllTargets(instance, owned, order - 1, verdict);
    std::sort(verdict.counterexamples.begin(), verdict.counterexamples.end());
    verdict.elapsed_seconds = SecondsSince(start);
    return verdict;
  });
}

std::vector<std::vector<int>> CyclicFactorizations(int order) {
  if (order < 1) throw Error(ErrorCode::kRange, "order must be >= 1");
  if (order == 1) return {{1}};
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  FactorizationsFrom(order, 2, prefix, out);
  return out;
}

}  // namespace trimatch
