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

// Exact-multiplicity matchings in graphs that are the union of three perfect
// matchings M_1, M_2, M_3 on 2n vertices.
//
// For any (a_1, a_2, a_3) with a_1 + a_2 + a_3 <= n - 2 there is a matching M
// with |M ∩ M_i| = a_i. FindMatching() builds one: it starts from n - 2 edges
// of the colour with the largest target and moves single edges to the other
// colours with ShiftStep(). A shift repeatedly swaps two edges along a
// shortest alternating path until one of the terminal exchanges applies; the
// minimum path length drops by at least 2 per swap, so a shift ends after at
// most n swaps.

#ifndef TRIMATCH_SOLVER_H_
#define TRIMATCH_SOLVER_H_

#include <vector>

#include "trimatch/graphcore.h"

namespace trimatch {

// A maximal path from an unmatched vertex whose edges alternate between
// `free_colour` edges outside M and `matched_colour` edges inside M, starting
// with a free edge.
struct AltPath {
  Vertex start = kNoVertex;
  std::vector<Vertex> vertices;  // vertices.front() == start
  std::vector<ColouredEdge> edges;

  int length() const { return static_cast<int>(edges.size()); }
  Vertex end() const { return vertices.back(); }
};

// Requires x unmatched by m and distinct colours. Throws kPrecondition.
AltPath TraceAlternatingPath(const Instance& instance, const Matching& m,
                             Vertex x, Colour free_colour,
                             Colour matched_colour);

struct PathPotential {
  int length = 0;
  Vertex vertex = kNoVertex;  // smallest unmatched vertex attaining `length`
};

// Minimum alternating path length over all unmatched vertices. Throws
// kPrecondition when m is perfect.
PathPotential MinAlternatingPathLength(const Instance& instance,
                                       const Matching& m, Colour free_colour,
                                       Colour matched_colour);

struct ShiftOutcome {
  Matching result;
  int swaps_performed = 0;
  // Potential (minimum alternating path length) at the start of every round;
  // strictly decreasing by at least 2.
  std::vector<int> potentials;
};

// Given |m| = n - 2 with at least one `from` edge, returns a matching of the
// same size with one fewer `from` edge and one more `to` edge; the third
// colour keeps its count. Requires k = 3.
//
// Throws kUnsupportedColourCount, kSize, kNoSourceEdge, kRange or
// kInvalidMatching.
ShiftOutcome ShiftStep(const Instance& instance, const Matching& m,
                       Colour from, Colour to);

struct SolveStats {
  int shift_steps = 0;
  int max_swaps_per_shift = 0;
  int total_swaps = 0;
};

// Returns M with ComputeDistribution(M) == target. Requires k = 3 and
// target.total() <= n - 2.
//
// Throws kUnsupportedColourCount or kRange.
Matching FindMatching(const Instance& instance, const Distribution& target,
                      SolveStats* stats = nullptr);

}  // namespace trimatch

#endif  // TRIMATCH_SOLVER_H_
