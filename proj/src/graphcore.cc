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

#include "trimatch/graphcore.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace trimatch {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidMatching: return "InvalidMatching";
    case ErrorCode::kPrecondition: return "PreconditionViolation";
    case ErrorCode::kNoSourceEdge: return "NoSourceEdge";
    case ErrorCode::kSize: return "SizeError";
    case ErrorCode::kUnsupportedColourCount: return "UnsupportedColourCount";
    case ErrorCode::kNoShifts: return "NoShifts";
    case ErrorCode::kNotADecomposition: return "NotADecomposition";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotLatin: return "NotLatin";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
  }
  return "Error";
}

VertexPair MakePair(Vertex a, Vertex b) {
  return a <= b ? VertexPair{a, b} : VertexPair{b, a};
}

ColouredEdge MakeEdge(Vertex a, Vertex b, Colour colour) {
  return a <= b ? ColouredEdge{a, b, colour} : ColouredEdge{b, a, colour};
}

int Distribution::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string Distribution::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  out += ')';
  return out;
}

Distribution ParseDistribution(std::string_view text) {
  std::vector<int> counts;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size() || value < 0) {
      throw Error(ErrorCode::kParse,
                  "expected comma-separated non-negative integers, got '" +
                      std::string(text) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Distribution(std::move(counts));
}

Instance::Instance(int half_order, bool bipartite,
                   std::vector<std::vector<VertexPair>> matchings)
    : half_order_(half_order),
      bipartite_(bipartite),
      matchings_(std::move(matchings)) {
  if (half_order_ < 1) {
    throw Error(ErrorCode::kRange, "half order must be at least 1");
  }
  if (matchings_.empty()) {
    throw Error(ErrorCode::kRange, "an instance needs at least one colour");
  }
  const int vertices = vertex_count();
  partners_.assign(matchings_.size() * vertices, kNoVertex);
  for (size_t c = 0; c < matchings_.size(); ++c) {
    for (VertexPair& pair : matchings_[c]) {
      if (pair.u < 0 || pair.u >= vertices || pair.v < 0 ||
          pair.v >= vertices) {
        throw Error(ErrorCode::kRange,
                    "vertex out of range in colour " + std::to_string(c + 1));
      }
      pair = MakePair(pair.u, pair.v);
      Vertex* row = &partners_[c * vertices];
      // First writer wins; double coverage is reported by Validate().
      if (row[pair.u] == kNoVertex) row[pair.u] = pair.v;
      if (row[pair.v] == kNoVertex) row[pair.v] = pair.u;
    }
    std::sort(matchings_[c].begin(), matchings_[c].end());
  }
}

Instance Instance::FromPartners(
    int half_order, bool bipartite,
    const std::vector<std::vector<Vertex>>& partners) {
  std::vector<std::vector<VertexPair>> matchings(partners.size());
  for (size_t c = 0; c < partners.size(); ++c) {
    for (Vertex v = 0; v < static_cast<Vertex>(partners[c].size()); ++v) {
      if (v < partners[c][v]) matchings[c].push_back({v, partners[c][v]});
    }
  }
  return Instance(half_order, bipartite, std::move(matchings));
}

const std::vector<VertexPair>& Instance::matching(Colour colour) const {
  if (colour < 1 || colour > colour_count()) {
    throw Error(ErrorCode::kRange,
                "colour " + std::to_string(colour) + " out of range");
  }
  return matchings_[colour - 1];
}

Vertex Instance::partner(Colour colour, Vertex v) const {
  if (colour < 1 || colour > colour_count()) {
    throw Error(ErrorCode::kRange,
                "colour " + std::to_string(colour) + " out of range");
  }
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::kRange,
                "vertex " + std::to_string(v) + " out of range");
  }
  return partner_unchecked(colour, v);
}

bool Instance::HasEdge(const ColouredEdge& edge) const {
  if (edge.colour < 1 || edge.colour > colour_count()) return false;
  const auto& pairs = matchings_[edge.colour - 1];
  return std::binary_search(pairs.begin(), pairs.end(),
                            MakePair(edge.u, edge.v));
}

Matching::Matching(std::vector<ColouredEdge> edges) : edges_(std::move(edges)) {
  for (ColouredEdge& e : edges_) e = MakeEdge(e.u, e.v, e.colour);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<Violation> Validate(const Instance& instance) {
  std::vector<Violation> out;
  const int n = instance.half_order();
  const int vertices = instance.vertex_count();
  for (Colour c = 1; c <= instance.colour_count(); ++c) {
    const auto& pairs = instance.matching(c);
    const std::string in_colour = " in colour " + std::to_string(c);
    if (static_cast<int>(pairs.size()) != n) {
      out.push_back({Violation::Kind::kWrongSize, kNoVertex, c,
                     "colour " + std::to_string(c) + " has " +
                         std::to_string(pairs.size()) + " edges, expected " +
                         std::to_string(n)});
    }
    std::vector<int> cover(vertices, 0);
    for (const VertexPair& p : pairs) {
      if (p.u == p.v) {
        out.push_back({Violation::Kind::kLoop, p.u, c,
                       "loop at vertex " + std::to_string(p.u) + in_colour});
      }
      ++cover[p.u];
      if (p.v != p.u) ++cover[p.v];
      if (instance.bipartite() && ((p.u < n) == (p.v < n))) {
        out.push_back({Violation::Kind::kEdgeInsidePart, p.u, c,
                       "edge inside part (" + std::to_string(p.u) + "," +
                           std::to_string(p.v) + ")" + in_colour});
      }
    }
    for (Vertex v = 0; v < vertices; ++v) {
      if (cover[v] == 0) {
        out.push_back({Violation::Kind::kUncovered, v, c,
                       "vertex " + std::to_string(v) + " uncovered" +
                           in_colour});
      } else if (cover[v] > 1) {
        out.push_back({Violation::Kind::kCoveredTwice, v, c,
                       "vertex " + std::to_string(v) + " covered twice" +
                           in_colour});
      }
    }
  }
  return out;
}

std::vector<Violation> ValidateMatching(const Instance& instance,
                                        const Matching& matching) {
  std::vector<Violation> out;
  std::vector<int> cover(instance.vertex_count(), 0);
  for (const ColouredEdge& e : matching.edges()) {
    std::string name = "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "," + std::to_string(e.colour) + ")";
    if (e.u < 0 || e.v >= instance.vertex_count()) {
      out.push_back({Violation::Kind::kVertexOutOfRange, e.u, e.colour,
                     "edge " + name + " has a vertex out of range"});
      continue;
    }
    if (e.colour < 1 || e.colour > instance.colour_count()) {
      out.push_back({Violation::Kind::kColourOutOfRange, e.u, e.colour,
                     "edge " + name + " has a colour out of range"});
    } else if (!instance.HasEdge(e)) {
      out.push_back({Violation::Kind::kMissingEdge, e.u, e.colour,
                     "edge " + name + " is not in the instance"});
    }
    ++cover[e.u];
    ++cover[e.v];
  }
  for (Vertex v = 0; v < instance.vertex_count(); ++v) {
    if (cover[v] > 1) {
      out.push_back({Violation::Kind::kNotDisjoint, v, 0,
                     "vertex " + std::to_string(v) +
                         " is covered by more than one matching edge"});
    }
  }
  return out;
}

Distribution ComputeDistribution(const Instance& instance,
                                 const Matching& matching) {
  Distribution out = Distribution::Zero(instance.colour_count());
  for (const ColouredEdge& e : matching.edges()) {
    if (!instance.HasEdge(e)) {
      std::ostringstream msg;
      msg << "edge (" << e.u << "," << e.v << ") with colour " << e.colour
          << " is not in the instance";
      throw Error(ErrorCode::kInvalidMatching, msg.str());
    }
    ++out[e.colour - 1];
  }
  return out;
}

}  // namespace trimatch
