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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "trimatch/oracle.h"

namespace trimatch {
namespace {

using PairSet = std::set<VertexPair>;

// All perfect matchings of 2n labelled vertices, read off permutations.
std::vector<PairSet> MatchingsByPermutation(int n) {
  std::vector<int> perm(2 * n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<PairSet> out;
  do {
    PairSet m;
    for (int i = 0; i < 2 * n; i += 2) m.insert(MakePair(perm[i], perm[i + 1]));
    out.insert(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

bool Disjoint(const PairSet& a, const PairSet& b) {
  for (const VertexPair& p : a) {
    if (b.count(p)) return false;
  }
  return true;
}

// Flood fill; a component is K4 when it spans 4 vertices and 6 distinct pairs.
bool NonK4ByFlood(int n, const std::vector<PairSet>& colours) {
  std::vector<std::vector<Vertex>> adj(2 * n);
  for (const PairSet& m : colours) {
    for (const VertexPair& p : m) {
      adj[p.u].push_back(p.v);
      adj[p.v].push_back(p.u);
    }
  }
  std::vector<int> label(2 * n, -1);
  for (Vertex s = 0; s < 2 * n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> stack = {s}, members;
    label[s] = s;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : adj[v]) {
        if (label[w] < 0) {
          label[w] = s;
          stack.push_back(w);
        }
      }
    }
    PairSet pairs;
    for (const PairSet& m : colours) {
      for (const VertexPair& p : m) {
        if (label[p.u] == s) pairs.insert(p);
      }
    }
    if (members.size() != 4 || pairs.size() != 6) return true;
  }
  return false;
}

struct TripleCounts {
  int all = 0;
  int non_k4 = 0;
};

TripleCounts CountTriples(int n, bool simple) {
  const std::vector<PairSet> matchings = MatchingsByPermutation(n);
  PairSet first;
  for (int t = 0; t < n; ++t) first.insert({2 * t, 2 * t + 1});
  TripleCounts counts;
  for (const PairSet& second : matchings) {
    if (simple && !Disjoint(first, second)) continue;
    for (const PairSet& third : matchings) {
      if (simple && (!Disjoint(first, third) || !Disjoint(second, third))) continue;
      ++counts.all;
      if (NonK4ByFlood(n, {first, second, third})) ++counts.non_k4;
    }
  }
  return counts;
}

TEST(CompositionsTest, Counts) {
  EXPECT_EQ(Compositions(2, 3).size(), 6u);
  EXPECT_EQ(Compositions(0, 5).size(), 1u);
  EXPECT_EQ(Compositions(4, 5).size(), 70u);
  EXPECT_EQ(Compositions(3, 1).size(), 1u);
  EXPECT_THROW(Compositions(-1, 2), Error);
}

TEST(CompositionsTest, LexicographicAndExact) {
  const auto c = Compositions(3, 3);
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  EXPECT_EQ(c.front(), Distribution({0, 0, 3}));
  EXPECT_EQ(c.back(), Distribution({3, 0, 0}));
  for (const Distribution& d : c) EXPECT_EQ(d.total(), 3);
  EXPECT_EQ(std::set<Distribution>(c.begin(), c.end()).size(), c.size());
}

TEST(LatinEnumerationTest, KnownCounts) {
  EXPECT_EQ(EnumerateLatinSquares(1, true).size(), 1u);
  EXPECT_EQ(EnumerateLatinSquares(2, true).size(), 1u);
  EXPECT_EQ(EnumerateLatinSquares(3, true).size(), 1u);
  EXPECT_EQ(EnumerateLatinSquares(4, true).size(), 4u);
  EXPECT_EQ(EnumerateLatinSquares(5, true).size(), 56u);
  EXPECT_EQ(EnumerateLatinSquares(2, false).size(), 2u);
  EXPECT_EQ(EnumerateLatinSquares(3, false).size(), 12u);
  EXPECT_EQ(EnumerateLatinSquares(4, false).size(), 576u);
}

TEST(LatinEnumerationTest, ReducedSquaresAreNormalised) {
  for (const LatinSquare& s : EnumerateLatinSquares(4, true)) {
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(s.at(0, i), i);
      EXPECT_EQ(s.at(i, 0), i);
    }
  }
}

TEST(LatinEnumerationTest, Guard) {
  EXPECT_THROW(EnumerateLatinSquares(6, true), Error);
  EXPECT_THROW(EnumerateLatinSquares(0, true), Error);
  EXPECT_EQ(EnumerateLatinSquares(6, true, true).size(), 9408u);
}

TEST(TripleEnumerationTest, HalfOrderTwo) {
  const auto simple = EnumerateTripleInstances(2, true);
  ASSERT_EQ(simple.size(), 2u);
  for (const Instance& g : simple) {
    EXPECT_TRUE(Validate(g).empty());
    EXPECT_FALSE(HasNonK4Component(g));
  }
  const auto multi = EnumerateTripleInstances(2, false);
  EXPECT_EQ(multi.size(), 9u);
  int with_parallel = 0;
  for (const Instance& g : multi) {
    if (HasNonK4Component(g)) ++with_parallel;
  }
  EXPECT_EQ(with_parallel, 7);
}

TEST(TripleEnumerationTest, CanonicalFirstColour) {
  for (const Instance& g : EnumerateTripleInstances(3, true)) {
    for (int t = 0; t < 3; ++t) EXPECT_EQ(g.partner(1, 2 * t), 2 * t + 1);
  }
}

TEST(TripleEnumerationTest, CountsMatchPermutationOracle) {
  for (int n : {2, 3, 4}) {
    for (bool simple : {true, false}) {
      const TripleCounts expected = CountTriples(n, simple);
      const auto instances = EnumerateTripleInstances(n, simple);
      EXPECT_EQ(static_cast<int>(instances.size()), expected.all) << n << simple;
      int non_k4 = 0;
      for (const Instance& g : instances) non_k4 += HasNonK4Component(g);
      EXPECT_EQ(non_k4, expected.non_k4) << n << simple;
      const SearchVerdict v = CheckConjectureThree(n, simple);
      EXPECT_EQ(v.instances_checked, expected.non_k4);
    }
  }
}

TEST(HasNonK4ComponentTest, Constructions) {
  EXPECT_FALSE(HasNonK4Component(K4Construction(4)));
  EXPECT_FALSE(HasNonK4Component(K4Construction(6)));
  EXPECT_TRUE(HasNonK4Component(CyclicConstruction({4, {0, 1, 2}})));
  EXPECT_TRUE(HasNonK4Component(Instance(2, false, {{{0, 1}, {2, 3}},
                                                   {{0, 1}, {2, 3}},
                                                   {{0, 1}, {2, 3}}})));
}

TEST(ConjectureThreeTest, SmallHalfOrders) {
  const SearchVerdict two = CheckConjectureThree(2, true);
  EXPECT_TRUE(two.pass());
  EXPECT_EQ(two.instances_checked, 0);
  const SearchVerdict three = CheckConjectureThree(3, true);
  EXPECT_TRUE(three.pass());
  EXPECT_EQ(three.instances_checked, 32);
  EXPECT_EQ(three.cases_checked, 32 * 6);
  EXPECT_EQ(three.mode, "simple");
  EXPECT_EQ(CheckConjectureThree(3, false).mode, "multigraph (exploratory)");
}

// Sum n-1 targets checked by an edge-subset brute force, independent of the
// search machinery.
TEST(ConjectureThreeTest, HalfOrderThreeBySubsets) {
  for (const Instance& g : EnumerateTripleInstances(3, true)) {
    std::vector<ColouredEdge> edges;
    for (Colour c = 1; c <= 3; ++c) {
      for (const VertexPair& p : g.matching(c)) edges.push_back({p.u, p.v, c});
    }
    std::set<Distribution> reached;
    for (size_t i = 0; i < edges.size(); ++i) {
      for (size_t j = i + 1; j < edges.size(); ++j) {
        const auto &a = edges[i], &b = edges[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
        Distribution d = Distribution::Zero(3);
        ++d[a.colour - 1];
        ++d[b.colour - 1];
        reached.insert(d);
      }
    }
    EXPECT_EQ(reached.size(), 6u);
  }
}

TEST(ConjectureThreeTest, Guard) {
  EXPECT_THROW(CheckConjectureThree(7, true), Error);
  EXPECT_THROW(CheckConjectureThree(0, true), Error);
}

TEST(ConjectureThreeTest, ShardsAndWorkersAgree) {
  const SearchVerdict whole = CheckConjectureThree(4, true);
  std::vector<SearchVerdict> parts;
  for (int i = 0; i < 3; ++i) {
    CheckOptions o;
    o.shard = {i, 3};
    parts.push_back(CheckConjectureThree(4, true, o));
  }
  EXPECT_TRUE(MergeVerdicts(parts).SameOutcome(whole));
  CheckOptions threaded;
  threaded.workers = 4;
  EXPECT_TRUE(CheckConjectureThree(4, true, threaded).SameOutcome(whole));
  EXPECT_EQ(whole.instances_checked, 1872);
}

TEST(RyserTest, SmallOrders) {
  const SearchVerdict one = CheckRyserMultiplicity(1);
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.instances_checked, 1);
  EXPECT_EQ(one.cases_checked, 1);
  const SearchVerdict three = CheckRyserMultiplicity(3);
  EXPECT_TRUE(three.pass());
  EXPECT_EQ(three.cases_checked, 6);
  const SearchVerdict four_all = CheckRyserMultiplicity(4, false);
  EXPECT_TRUE(four_all.pass());
  EXPECT_EQ(four_all.instances_checked, 576);
  EXPECT_EQ(four_all.cases_checked, 576 * 20);
  EXPECT_THROW(CheckRyserMultiplicity(6), Error);
}

TEST(RyserTest, ShardedMatchesWhole) {
  const SearchVerdict whole = CheckRyserMultiplicity(4, false);
  std::vector<SearchVerdict> parts;
  for (int i = 0; i < 5; ++i) {
    CheckOptions o;
    o.shard = {i, 5};
    parts.push_back(CheckRyserMultiplicity(4, false, o));
  }
  EXPECT_TRUE(MergeVerdicts(parts).SameOutcome(whole));
}

TEST(AbelianTest, SmallGroups) {
  for (const std::vector<int>& f :
       std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {2, 2}, {2, 3}}) {
    const SearchVerdict v = CheckAbelianHall(f);
    EXPECT_TRUE(v.pass());
    EXPECT_EQ(v.instances_checked, 1);
  }
  EXPECT_EQ(CheckAbelianHall({2, 2}).scope, "Z_2 x Z_2, sum order-1");
  EXPECT_EQ(CheckAbelianHall({2, 2}).cases_checked, 20);
  EXPECT_THROW(CheckAbelianHall({11}), Error);
}

TEST(AbelianTest, ShardedTargets) {
  const SearchVerdict whole = CheckAbelianHall({2, 3});
  std::vector<SearchVerdict> parts;
  for (int i = 0; i < 4; ++i) {
    CheckOptions o;
    o.shard = {i, 4};
    parts.push_back(CheckAbelianHall({2, 3}, o));
  }
  EXPECT_TRUE(MergeVerdicts(parts).SameOutcome(whole));
}

TEST(AbelianTest, CyclicTableAgreesWithRyserOnSameSquare) {
  // The reduced cyclic square of order 3 is the only reduced square.
  const SearchVerdict ryser = CheckRyserMultiplicity(3);
  const SearchVerdict abelian = CheckAbelianHall({3});
  EXPECT_EQ(ryser.pass(), abelian.pass());
  EXPECT_EQ(ryser.cases_checked, abelian.cases_checked);
}

TEST(FactorizationTest, Orders) {
  EXPECT_EQ(CyclicFactorizations(1), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(CyclicFactorizations(8),
            (std::vector<std::vector<int>>{{2, 2, 2}, {2, 4}, {8}}));
  EXPECT_EQ(CyclicFactorizations(6),
            (std::vector<std::vector<int>>{{2, 3}, {6}}));
  EXPECT_EQ(CyclicFactorizations(7).size(), 1u);
}

TEST(ShardTest, Parse) {
  const Shard s = ParseShard("2/5");
  EXPECT_EQ(s.index, 2);
  EXPECT_EQ(s.count, 5);
  EXPECT_TRUE(s.Owns(7));
  EXPECT_FALSE(s.Owns(8));
  EXPECT_THROW(ParseShard("5/5"), Error);
  EXPECT_THROW(ParseShard("1"), Error);
  EXPECT_THROW(ParseShard("a/2"), Error);
  EXPECT_THROW(ParseShard("0/0"), Error);
}

TEST(VerdictTest, SerializationAndMerge) {
  SearchVerdict a = CheckRyserMultiplicity(2);
  EXPECT_EQ(SerializeVerdict(a),
            "{\"cases_checked\":2,\"check\":\"ryser\",\"counterexamples\":[],"
            "\"instances_checked\":1,\"mode\":\"reduced squares\","
            "\"scope\":\"order=2, sum order-1\",\"verdict\":\"pass\"}\n");
  EXPECT_NE(SerializeVerdict(a, true).find("elapsed_seconds"), std::string::npos);
  SearchVerdict tampered = a;
  tampered.counterexamples.push_back({K4Construction(2), {1, 1, 0}});
  EXPECT_FALSE(tampered.pass());
  EXPECT_NE(SerializeVerdict(tampered).find("\"counterexample\""), std::string::npos);
  EXPECT_NE(FormatVerdict(tampered).find("target (1,1,0)"), std::string::npos);
  SearchVerdict other = CheckAbelianHall({2});
  EXPECT_THROW(MergeVerdicts({a, other}), Error);
  EXPECT_THROW(MergeVerdicts({}), Error);
}

}  // namespace
}  // namespace trimatch
