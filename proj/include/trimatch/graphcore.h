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

// Core types for graphs whose edge set is a union of k coloured perfect
// matchings on the vertex set {0, ..., 2n-1}.
//
// An Instance stores each colour class as a sorted list of vertex pairs plus a
// flat partner table, so partner(colour, v) is a single array lookup. The same
// vertex pair may appear under several colours; an edge is identified by its
// (pair, colour) and parallel edges are independent objects.

#ifndef TRIMATCH_GRAPHCORE_H_
#define TRIMATCH_GRAPHCORE_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trimatch/error.h"

namespace trimatch {

using Vertex = int;
// Colours are 1-based, matching the numbering M_1, ..., M_k.
using Colour = int;

inline constexpr Vertex kNoVertex = -1;

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const VertexPair&) const = default;
};

// Returns the pair with endpoints ordered so that u <= v.
VertexPair MakePair(Vertex a, Vertex b);

struct ColouredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Colour colour = 1;

  auto operator<=>(const ColouredEdge&) const = default;
};

ColouredEdge MakeEdge(Vertex a, Vertex b, Colour colour);

// Colour multiplicities (a_1, ..., a_k). Index 0 holds colour 1.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<int> counts) : counts_(std::move(counts)) {}
  Distribution(std::initializer_list<int> counts) : counts_(counts) {}

  static Distribution Zero(int colour_count) {
    return Distribution(std::vector<int>(colour_count, 0));
  }

  int size() const { return static_cast<int>(counts_.size()); }
  int operator[](int index) const { return counts_[index]; }
  int& operator[](int index) { return counts_[index]; }
  // Multiplicity of a 1-based colour.
  int of(Colour colour) const { return counts_[colour - 1]; }
  int total() const;
  const std::vector<int>& counts() const { return counts_; }

  // "(a1,a2,a3)"
  std::string ToString() const;

  auto operator<=>(const Distribution&) const = default;

 private:
  std::vector<int> counts_;
};

// Parses "a1,a2,...,ak" (non-negative integers). Throws kParse.
Distribution ParseDistribution(std::string_view text);

class Instance {
 public:
  // Pairs are normalised to u < v and each colour class is sorted. Throws
  // kRange when half_order < 1, there are no colours, or a vertex id falls
  // outside [0, 2n). Structural problems (a vertex covered twice, a loop, an
  // edge inside a part) are accepted here and reported by Validate().
  Instance(int half_order, bool bipartite,
           std::vector<std::vector<VertexPair>> matchings);

  // Builds an instance from per-colour partner arrays (each of length 2n).
  static Instance FromPartners(int half_order, bool bipartite,
                               const std::vector<std::vector<Vertex>>& partners);

  int half_order() const { return half_order_; }
  int vertex_count() const { return 2 * half_order_; }
  int colour_count() const { return static_cast<int>(matchings_.size()); }
  bool bipartite() const { return bipartite_; }

  const std::vector<VertexPair>& matching(Colour colour) const;
  const std::vector<std::vector<VertexPair>>& matchings() const {
    return matchings_;
  }

  // The vertex joined to v by the colour-`colour` edge. Throws kRange.
  Vertex partner(Colour colour, Vertex v) const;
  Vertex partner_unchecked(Colour colour, Vertex v) const {
    return partners_[static_cast<size_t>(colour - 1) * vertex_count() + v];
  }
  // Row-major partner table: entry (c-1)*2n + v. kNoVertex if uncovered.
  std::span<const Vertex> partner_table() const { return partners_; }

  bool HasEdge(const ColouredEdge& edge) const;

  bool operator==(const Instance& other) const = default;
  auto operator<=>(const Instance& other) const = default;

 private:
  int half_order_;
  bool bipartite_;
  std::vector<std::vector<VertexPair>> matchings_;
  std::vector<Vertex> partners_;
};

// A set of coloured edges; stored sorted by (u, v, colour) without repeats.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<ColouredEdge> edges);

  const std::vector<ColouredEdge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<ColouredEdge> edges_;
};

struct Violation {
  enum class Kind {
    kUncovered,
    kCoveredTwice,
    kLoop,
    kEdgeInsidePart,
    kWrongSize,
    kDuplicateEdge,
    kMissingEdge,
    kColourOutOfRange,
    kVertexOutOfRange,
    kNotDisjoint,
  };
  Kind kind;
  Vertex vertex = kNoVertex;
  Colour colour = 0;
  std::string message;
};

// Empty result means the instance satisfies every structural invariant.
std::vector<Violation> Validate(const Instance& instance);

// Checks that the matching is vertex-disjoint and every edge exists in the
// instance under its stated colour.
std::vector<Violation> ValidateMatching(const Instance& instance,
                                        const Matching& matching);

// Colour multiplicities of `matching`. Throws kInvalidMatching if an edge is
// not present in the instance.
Distribution ComputeDistribution(const Instance& instance,
                                 const Matching& matching);

// Canonical text forms. Serialisation always ends with a newline; parsing
// throws kParse with the offending field.
std::string SerializeInstance(const Instance& instance);
Instance ParseInstance(std::string_view text);
std::string SerializeMatching(const Matching& matching);
Matching ParseMatching(std::string_view text, const Instance& instance);

}  // namespace trimatch

#endif  // TRIMATCH_GRAPHCORE_H_
