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

// Instance generators: cyclic sum graphs with no perfect matching of a given
// colour profile, disjoint K4 blocks, Latin squares and Cayley tables, the
// completion of disjoint perfect matchings of K_{n,n}, and random instances.

#ifndef TRIMATCH_CONSTRUCTIONS_H_
#define TRIMATCH_CONSTRUCTIONS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trimatch/graphcore.h"

namespace trimatch {

// Residues x_1, ..., x_k in [0, modulus).
struct ShiftVector {
  int modulus = 1;
  std::vector<int> shifts;

  bool operator==(const ShiftVector&) const = default;
};

// True iff the shifts are pairwise distinct residues and
// sum_i a_i * x_i is not divisible by the modulus.
bool ShiftsAvoidZeroSum(const ShiftVector& shifts,
                        const Distribution& multiplicities);

// Finds shifts satisfying ShiftsAvoidZeroSum for multiplicities a_i in
// [0, n-1] summing to n, with k <= n. Throws kRange on bad input and kNoShifts
// when none exist (for example n = k odd with every a_i = 1).
ShiftVector ChooseShifts(int n, const Distribution& multiplicities);

// Bipartite instance on {0..n-1} + {n..2n-1}: edge (i, n+j) has colour s iff
// i + j = x_s (mod n). Throws kRange unless the shifts are distinct residues.
Instance CyclicConstruction(const ShiftVector& shifts);

// n/2 disjoint K4 blocks {4t..4t+3}, each split as M_1 = {01,23},
// M_2 = {02,13}, M_3 = {03,12} in block-local labels. Throws kRange unless n
// is even and >= 2.
Instance K4Construction(int n);

class LatinSquare {
 public:
  // Throws kNotLatin unless every row and column is a permutation of
  // {0, ..., order-1}.
  explicit LatinSquare(std::vector<std::vector<int>> cells);

  int order() const { return static_cast<int>(cells_.size()); }
  int at(int row, int column) const { return cells_[row][column]; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  bool operator==(const LatinSquare&) const = default;

 private:
  std::vector<std::vector<int>> cells_;
};

// Symbol s becomes colour s + 1: {(i, n+j) : cells[i][j] = s}.
Instance LatinToInstance(const LatinSquare& square);
// Inverse of LatinToInstance. Throws kNotADecomposition when the instance is
// not a decomposition of K_{n,n} into n perfect matchings.
LatinSquare InstanceToLatin(const Instance& instance);

// Addition table of Z_{m1} x ... x Z_{mr}, elements in lexicographic order
// with the first factor most significant. Throws kRange on an empty list or a
// factor below 1.
LatinSquare CayleyTable(const std::vector<int>& factors);

// Completes k < n pairwise disjoint perfect matchings of K_{n,n} to n of them.
// The first k colours are kept. Throws kNotDisjoint if two classes share a
// pair, kPrecondition if the instance is not a valid bipartite instance.
Instance ExtendToDecomposition(const Instance& partial);

// k uniformly random perfect matchings of K_{2n} (or of K_{n,n} when
// bipartite). Deterministic for a given seed on every platform.
Instance RandomInstance(int n, int k, std::uint64_t seed, bool bipartite);

std::string SerializeLatinSquare(const LatinSquare& square);
LatinSquare ParseLatinSquare(std::string_view text);

}  // namespace trimatch

#endif  // TRIMATCH_CONSTRUCTIONS_H_
