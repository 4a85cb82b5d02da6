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

// Exhaustive desk-scale searches for counterexamples to three statements:
//
//  * three-colour: every graph on 2n vertices decomposed into three perfect
//    matchings with a component other than K4 has, for each (a_1,a_2,a_3)
//    summing to n-1, a matching with exactly those multiplicities;
//  * Latin squares: every decomposition of K_{n,n} into n perfect matchings
//    has a matching with any multiplicities summing to n-1;
//  * the same for addition tables of abelian groups.
//
// A counterexample is data, not an error: checkers return a SearchVerdict
// listing every counterexample, each re-confirmed by a fresh ExistsExact call.
//
// Work is split deterministically: shard i of m handles every enumeration
// index congruent to i mod m. Running the shards separately and merging with
// MergeVerdicts gives the same verdict as a single run.

#ifndef TRIMATCH_CONJECTURES_H_
#define TRIMATCH_CONJECTURES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trimatch/constructions.h"
#include "trimatch/graphcore.h"

namespace trimatch {

struct Shard {
  int index = 0;
  int count = 1;

  bool Owns(std::int64_t item) const { return item % count == index; }
};

// Throws kParse unless text is "i/m" with 0 <= i < m.
Shard ParseShard(std::string_view text);

struct CheckOptions {
  Shard shard;
  int workers = 1;
  bool override_guard = false;
};

// Guards, lifted by CheckOptions::override_guard.
inline constexpr int kMaxConjectureThreeHalfOrder = 6;
inline constexpr int kMaxLatinOrder = 5;
inline constexpr int kMaxAbelianOrder = 10;

struct Counterexample {
  Instance instance;
  Distribution target;

  auto operator<=>(const Counterexample&) const = default;
  bool operator==(const Counterexample&) const = default;
};

struct SearchVerdict {
  std::string check;  // "conj3", "ryser" or "abelian"
  std::string scope;
  std::string mode;
  std::int64_t instances_checked = 0;
  std::int64_t cases_checked = 0;
  std::vector<Counterexample> counterexamples;  // canonically sorted
  double elapsed_seconds = 0.0;

  bool pass() const { return counterexamples.empty(); }
  // Compares everything except timing.
  bool SameOutcome(const SearchVerdict& other) const;
};

// Sums counts and merges counterexample lists into canonical order. All
// inputs must describe the same check and scope.
SearchVerdict MergeVerdicts(const std::vector<SearchVerdict>& parts);

// JSON form. Timing is left out unless requested so that files are
// reproducible byte for byte.
std::string SerializeVerdict(const SearchVerdict& verdict,
                             bool include_timing = false);
std::string FormatVerdict(const SearchVerdict& verdict);

// All vectors of `parts` non-negative integers summing to `total`, in
// lexicographic order.
std::vector<Distribution> Compositions(int total, int parts);

// Row-by-row backtracking. Reduced squares have first row and column in
// natural order. Throws kRange when order exceeds kMaxLatinOrder without
// override (order 6 reduced is still feasible; 7 is not).
void ForEachLatinSquare(int order, bool reduced,
                        const std::function<void(const LatinSquare&)>& visit,
                        bool override_guard = false);
std::vector<LatinSquare> EnumerateLatinSquares(int order, bool reduced,
                                               bool override_guard = false);

// Every triple (M_1, M_2, M_3) on 2n vertices with M_1 = {(2t, 2t+1)} and
// M_2, M_3 arbitrary perfect matchings; with simple_only, no vertex pair may
// appear in two colours. `visit` receives the enumeration index and the
// per-colour partner arrays (each of length 2n); only indices owned by
// `shard` are visited.
using TripleVisitor = std::function<void(std::int64_t index,
                                         const std::vector<std::vector<Vertex>>&)>;
void ForEachTripleInstance(int n, bool simple_only, const Shard& shard,
                           const TripleVisitor& visit);
std::vector<Instance> EnumerateTripleInstances(int n, bool simple_only);

// A component is a K4 iff it has four vertices and its colour classes are
// the three distinct pairings of those vertices.
bool HasNonK4Component(const Instance& instance);

SearchVerdict CheckConjectureThree(int n, bool simple_only,
                                   const CheckOptions& options = {});
SearchVerdict CheckRyserMultiplicity(int order, bool reduced_only = true,
                                     const CheckOptions& options = {});
SearchVerdict CheckAbelianHall(const std::vector<int>& factors,
                               const CheckOptions& options = {});

// Factor lists (each factor >= 2, non-decreasing; {1} for the trivial group)
// whose product is `order`.
std::vector<std::vector<int>> CyclicFactorizations(int order);

}  // namespace trimatch

#endif  // TRIMATCH_CONJECTURES_H_
