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

// Instance and matching file formats. Output is produced by hand so the byte
// layout stays fixed; input goes through nlohmann::json.

#include <string>

#include "json.hpp"
#include "trimatch/graphcore.h"

namespace trimatch {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

const json& Field(const json& object, const char* name) {
  if (!object.is_object()) Fail("document", "expected an object");
  auto it = object.find(name);
  if (it == object.end()) Fail(name, "missing field");
  return *it;
}

int IntField(const json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where, "expected an integer");
  return value.get<int>();
}

}  // namespace

std::string SerializeInstance(const Instance& instance) {
  std::string out = "{\"n\": " + std::to_string(instance.half_order()) +
                    ", \"k\": " + std::to_string(instance.colour_count()) +
                    ", \"bipartite\": " +
                    (instance.bipartite() ? "true" : "false") +
                    ", \"matchings\": [";
  for (Colour c = 1; c <= instance.colour_count(); ++c) {
    if (c > 1) out += ',';
    out += '[';
    bool first = true;
    for (const VertexPair& p : instance.matching(c)) {
      if (!first) out += ',';
      first = false;
      out += '[' + std::to_string(p.u) + ',' + std::to_string(p.v) + ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Instance ParseInstance(std::string_view text) {
  const json doc = ParseJson(text);
  const int n = IntField(Field(doc, "n"), "n");
  const int k = IntField(Field(doc, "k"), "k");
  const json& bip = Field(doc, "bipartite");
  if (!bip.is_boolean()) Fail("bipartite", "expected a boolean");
  const json& list = Field(doc, "matchings");
  if (n < 1) Fail("n", "must be positive");
  if (k < 1) Fail("k", "must be positive");
  if (!list.is_array()) Fail("matchings", "expected an array");
  if (static_cast<int>(list.size()) != k) {
    Fail("matchings", "expected " + std::to_string(k) + " colour classes, got " +
                          std::to_string(list.size()));
  }
  std::vector<std::vector<VertexPair>> matchings(k);
  for (int c = 0; c < k; ++c) {
    const std::string where = "matchings[" + std::to_string(c) + "]";
    const json& pairs = list[c];
    if (!pairs.is_array()) Fail(where, "expected an array of pairs");
    if (static_cast<int>(pairs.size()) != n) {
      Fail(where, "expected " + std::to_string(n) + " edges, got " +
                      std::to_string(pairs.size()));
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) {
        Fail(at, "expected a pair [u,v]");
      }
      const int u = IntField(pairs[i][0], at);
      const int v = IntField(pairs[i][1], at);
      if (u < 0 || u >= 2 * n || v < 0 || v >= 2 * n) {
        Fail(at, "vertex out of range [0," + std::to_string(2 * n) + ")");
      }
      matchings[c].push_back(MakePair(u, v));
    }
  }
  return Instance(n, bip.get<bool>(), std::move(matchings));
}

std::string SerializeMatching(const Matching& matching) {
  std::string out = "{\"edges\": [";
  bool first = true;
  for (const ColouredEdge& e : matching.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(e.u) + ',' + std::to_string(e.v) + ',' +
           std::to_string(e.colour) + ']';
  }
  out += "]}\n";
  return out;
}

Matching ParseMatching(std::string_view text, const Instance& instance) {
  const json doc = ParseJson(text);
  const json& list = Field(doc, "edges");
  if (!list.is_array()) Fail("edges", "expected an array");
  std::vector<ColouredEdge> edges;
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string at = "edges[" + std::to_string(i) + "]";
    if (!list[i].is_array() || list[i].size() != 3) {
      Fail(at, "expected a triple [u,v,colour]");
    }
    const int u = IntField(list[i][0], at);
    const int v = IntField(list[i][1], at);
    const int colour = IntField(list[i][2], at);
    if (u < 0 || u >= instance.vertex_count() || v < 0 ||
        v >= instance.vertex_count()) {
      Fail(at, "vertex out of range");
    }
    if (colour < 1 || colour > instance.colour_count()) {
      Fail(at, "colour " + std::to_string(colour) + " out of range [1," +
                   std::to_string(instance.colour_count()) + "]");
    }
    edges.push_back(MakeEdge(u, v, colour));
  }
  return Matching(std::move(edges));
}

}  // namespace trimatch
