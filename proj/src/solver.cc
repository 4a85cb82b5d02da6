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

#include "trimatch/solver.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace trimatch {
namespace {

// Mutable matching indexed by vertex. Private to one solver call.
class WorkingMatching {
 public:
  WorkingMatching(const Instance& instance, const Matching& m)
      : mate_(instance.vertex_count(), kNoVertex),
        colour_(instance.vertex_count(), 0) {
    for (const ColouredEdge& e : m.edges()) {
      if (!instance.HasEdge(e)) {
        throw Error(ErrorCode::kInvalidMatching,
                    "edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") colour " +
                        std::to_string(e.colour) + " is not in the instance");
      }
      if (mate_[e.u] != kNoVertex || mate_[e.v] != kNoVertex) {
        throw Error(ErrorCode::kInvalidMatching,
                    "matching edges share a vertex at (" + std::to_string(e.u) +
                        "," + std::to_string(e.v) + ")");
      }
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
      colour_[e.u] = colour_[e.v] = e.colour;
      ++size_;
    }
  }

  Vertex mate(Vertex v) const { return mate_[v]; }
  Colour colour(Vertex v) const { return colour_[v]; }
  bool matched(Vertex v) const { return mate_[v] != kNoVertex; }
  int size() const { return size_; }

  void Add(Vertex a, Vertex b, Colour c) {
    if (a == b || matched(a) || matched(b)) {
      throw std::logic_error("solver tried to add an edge at a matched vertex");
    }
    mate_[a] = b;
    mate_[b] = a;
    colour_[a] = colour_[b] = c;
    ++size_;
  }

  // Removes the matching edge at v.
  void RemoveAt(Vertex v) {
    const Vertex u = mate_[v];
    if (u == kNoVertex) throw std::logic_error("no matching edge to remove");
    mate_[u] = mate_[v] = kNoVertex;
    colour_[u] = colour_[v] = 0;
    --size_;
  }

  // Smaller endpoint of the lexicographically smallest edge of colour c.
  Vertex SmallestEdgeOf(Colour c) const {
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
      if (colour_[v] == c && v < mate_[v]) return v;
    }
    return kNoVertex;
  }

  std::vector<Vertex> Unmatched() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
      if (!matched(v)) out.push_back(v);
    }
    return out;
  }

  Matching ToMatching() const {
    std::vector<ColouredEdge> edges;
    edges.reserve(size_);
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
      if (matched(v) && v < mate_[v]) edges.push_back({v, mate_[v], colour_[v]});
    }
    return Matching(std::move(edges));
  }

 private:
  std::vector<Vertex> mate_;
  std::vector<Colour> colour_;
  int size_ = 0;
};

AltPath Trace(const Instance& instance, const WorkingMatching& w, Vertex x,
              Colour free_colour, Colour matched_colour,
              std::vector<char>& seen) {
  AltPath path;
  path.start = x;
  path.vertices.push_back(x);
  seen[x] = 1;
  Vertex current = x;
  while (true) {
    const Vertex next = instance.partner_unchecked(free_colour, current);
    if (next == kNoVertex || seen[next]) break;
    if (w.mate(current) == next && w.colour(current) == free_colour) break;
    path.edges.push_back(MakeEdge(current, next, free_colour));
    path.vertices.push_back(next);
    seen[next] = 1;
    current = next;
    if (w.colour(current) != matched_colour) break;
    const Vertex after = w.mate(current);
    if (seen[after]) break;
    path.edges.push_back(MakeEdge(current, after, matched_colour));
    path.vertices.push_back(after);
    seen[after] = 1;
    current = after;
  }
  for (Vertex v : path.vertices) seen[v] = 0;
  return path;
}

void CheckColour(const Instance& instance, Colour c) {
  if (c < 1 || c > instance.colour_count()) {
    throw Error(ErrorCode::kRange,
                "colour " + std::to_string(c) + " out of range");
  }
}

struct Minimum {
  int length = 0;
  Vertex x = kNoVertex;
  Vertex end = kNoVertex;
};

Minimum FindMinimum(const Instance& instance, const WorkingMatching& w,
                    const std::vector<Vertex>& unmatched, Colour free_colour,
                    Colour matched_colour, std::vector<char>& seen) {
  Minimum best;
  for (Vertex v : unmatched) {
    AltPath p = Trace(instance, w, v, free_colour, matched_colour, seen);
    if (best.x == kNoVertex || p.length() < best.length) {
      best = {p.length(), v, p.end()};
    }
  }
  return best;
}

// Moves one edge from colour `from` to colour `to` in place.
int Shift(const Instance& instance, WorkingMatching& w, Colour from, Colour to,
          std::vector<int>* potentials) {
  Colour third = 6 - from - to;
  const int n = instance.half_order();
  std::vector<char> seen(instance.vertex_count(), 0);
  int swaps = 0;
  int previous = 0;
  while (true) {
    const std::vector<Vertex> unmatched = w.Unmatched();
    const Minimum best = FindMinimum(instance, w, unmatched, to, third, seen);
    if (potentials != nullptr) potentials->push_back(best.length);
    if (swaps > 0 && best.length > previous - 2) {
      throw std::logic_error("alternating path potential did not drop by 2");
    }
    previous = best.length;

    const Vertex x = best.x;
    const Vertex y = instance.partner_unchecked(to, x);
    const Vertex third_of_x = instance.partner_unchecked(third, x);
    Vertex z = kNoVertex;
    for (Vertex v : unmatched) {
      if (v != x && v != best.end && v != third_of_x) {
        z = v;
        break;
      }
    }
    if (z == kNoVertex) {
      throw std::logic_error("no unmatched vertex available for the exchange");
    }

    if (!w.matched(y)) {
      w.RemoveAt(w.SmallestEdgeOf(from));
      w.Add(x, y, to);
      return swaps;
    }
    if (w.colour(y) == from) {
      w.RemoveAt(y);
      w.Add(x, y, to);
      return swaps;
    }
    // A `to`-coloured matching edge at y would have to be xy itself.
    if (w.colour(y) != third) {
      throw std::logic_error("unexpected matching edge at the path's second vertex");
    }
    const Vertex u = instance.partner_unchecked(third, z);
    if (!w.matched(u)) {
      w.RemoveAt(y);
      w.RemoveAt(w.SmallestEdgeOf(from));
      w.Add(x, y, to);
      w.Add(z, u, third);
      return swaps;
    }
    if (w.colour(u) == from) {
      w.RemoveAt(y);
      w.RemoveAt(u);
      w.Add(x, y, to);
      w.Add(z, u, third);
      return swaps;
    }
    // u carries a `to` edge: swap so that the distribution is unchanged and
    // the path from y's old partner is two edges shorter.
    w.RemoveAt(y);
    w.RemoveAt(u);
    w.Add(x, y, to);
    w.Add(z, u, third);
    ++swaps;
    if (swaps > n) throw std::logic_error("shift exceeded n swaps");
  }
}

}  // namespace

AltPath TraceAlternatingPath(const Instance& instance, const Matching& m,
                             Vertex x, Colour free_colour,
                             Colour matched_colour) {
  CheckColour(instance, free_colour);
  CheckColour(instance, matched_colour);
  if (free_colour == matched_colour) {
    throw Error(ErrorCode::kPrecondition, "path colours must differ");
  }
  if (x < 0 || x >= instance.vertex_count()) {
    throw Error(ErrorCode::kRange, "vertex " + std::to_string(x) + " out of range");
  }
  WorkingMatching w(instance, m);
  if (w.matched(x)) {
    throw Error(ErrorCode::kPrecondition,
                "start vertex " + std::to_string(x) + " is matched");
  }
  std::vector<char> seen(instance.vertex_count(), 0);
  return Trace(instance, w, x, free_colour, matched_colour, seen);
}

PathPotential MinAlternatingPathLength(const Instance& instance,
                                       const Matching& m, Colour free_colour,
                                       Colour matched_colour) {
  CheckColour(instance, free_colour);
  CheckColour(instance, matched_colour);
  if (free_colour == matched_colour) {
    throw Error(ErrorCode::kPrecondition, "path colours must differ");
  }
  WorkingMatching w(instance, m);
  const std::vector<Vertex> unmatched = w.Unmatched();
  if (unmatched.empty()) {
    throw Error(ErrorCode::kPrecondition, "matching is perfect");
  }
  std::vector<char> seen(instance.vertex_count(), 0);
  const Minimum best =
      FindMinimum(instance, w, unmatched, free_colour, matched_colour, seen);
  return {best.length, best.x};
}

ShiftOutcome ShiftStep(const Instance& instance, const Matching& m,
                       Colour from, Colour to) {
  if (instance.colour_count() != 3) {
    throw Error(ErrorCode::kUnsupportedColourCount,
                "shifting requires exactly 3 colours");
  }
  CheckColour(instance, from);
  CheckColour(instance, to);
  if (from == to) throw Error(ErrorCode::kRange, "source and target colour coincide");
  WorkingMatching w(instance, m);
  const int n = instance.half_order();
  if (w.size() != n - 2) {
    throw Error(ErrorCode::kSize, "matching has " + std::to_string(w.size()) +
                                      " edges, expected n-2 = " +
                                      std::to_string(n - 2));
  }
  if (w.SmallestEdgeOf(from) == kNoVertex) {
    throw Error(ErrorCode::kNoSourceEdge,
                "matching has no edge of colour " + std::to_string(from));
  }
  ShiftOutcome out;
  out.swaps_performed = Shift(instance, w, from, to, &out.potentials);
  out.result = w.ToMatching();
  return out;
}

Matching FindMatching(const Instance& instance, const Distribution& target,
                      SolveStats* stats) {
  if (instance.colour_count() != 3) {
    throw Error(ErrorCode::kUnsupportedColourCount,
                "exact solving is supported for 3 colours only");
  }
  if (target.size() != 3) {
    throw Error(ErrorCode::kRange, "target must have 3 entries");
  }
  for (int a : target.counts()) {
    if (a < 0) throw Error(ErrorCode::kRange, "target entries must be >= 0");
  }
  const int n = instance.half_order();
  const int sum = target.total();
  if (sum > n - 2) {
    throw Error(ErrorCode::kRange, "target " + target.ToString() + " sums to " +
                                       std::to_string(sum) + " > n-2 = " +
                                       std::to_string(n - 2));
  }
  if (stats != nullptr) *stats = SolveStats{};
  if (n - 2 == 0) return Matching();

  // The colour with the largest target plays the source role.
  std::array<Colour, 3> order = {1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](Colour a, Colour b) {
    return target.of(a) > target.of(b);
  });
  const Colour source = order[0];

  const auto& pairs = instance.matching(source);
  std::vector<ColouredEdge> start;
  for (int i = 0; i < n - 2; ++i) {
    start.push_back({pairs[i].u, pairs[i].v, source});
  }
  WorkingMatching w(instance, Matching(std::move(start)));
  for (int r = 1; r < 3; ++r) {
    for (int t = 0; t < target.of(order[r]); ++t) {
      const int swaps = Shift(instance, w, source, order[r], nullptr);
      if (stats != nullptr) {
        ++stats->shift_steps;
        stats->total_swaps += swaps;
        stats->max_swaps_per_shift = std::max(stats->max_swaps_per_shift, swaps);
      }
    }
  }
  // Trim the padding: drop the lexicographically last source edges.
  std::vector<ColouredEdge> edges = w.ToMatching().edges();
  int excess = n - 2 - sum;
  for (auto it = edges.end(); excess > 0 && it != edges.begin();) {
    --it;
    if (it->colour == source) {
      it = edges.erase(it);
      --excess;
    }
  }
  return Matching(std::move(edges));
}

}  // namespace trimatch
