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

#include "trimatch/constructions.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace trimatch {
namespace {

constexpr long kPermutationBudget = 200000;
constexpr long kExhaustiveBudget = 20000000;

int Mod(long value, int n) {
  long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Unbiased draw in [0, bound) from a 64-bit engine; avoids the
// implementation-defined std::uniform_int_distribution.
std::uint64_t Below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

void Shuffle(std::vector<Vertex>& items, std::mt19937_64& engine) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[Below(engine, i)]);
  }
}

}  // namespace

bool ShiftsAvoidZeroSum(const ShiftVector& shifts,
                        const Distribution& multiplicities) {
  const int n = shifts.modulus;
  if (n < 1 || static_cast<int>(shifts.shifts.size()) != multiplicities.size()) {
    return false;
  }
  std::vector<char> used(n, 0);
  long sum = 0;
  for (size_t i = 0; i < shifts.shifts.size(); ++i) {
    const int x = shifts.shifts[i];
    if (x < 0 || x >= n || used[x]) return false;
    used[x] = 1;
    sum += static_cast<long>(multiplicities[i]) * x;
  }
  return Mod(sum, n) != 0;
}

ShiftVector ChooseShifts(int n, const Distribution& multiplicities) {
  const int k = multiplicities.size();
  if (n < 1 || k < 1 || k > n) {
    throw Error(ErrorCode::kRange, "need 1 <= k <= n");
  }
  for (int a : multiplicities.counts()) {
    if (a < 0 || a > n - 1) {
      throw Error(ErrorCode::kRange, "multiplicities must lie in [0, n-1]");
    }
  }
  if (multiplicities.total() != n) {
    throw Error(ErrorCode::kRange, "multiplicities must sum to n");
  }

  ShiftVector candidate{n, std::vector<int>(k)};
  auto accept = [&]() { return ShiftsAvoidZeroSum(candidate, multiplicities); };

  for (int i = 0; i < k; ++i) candidate.shifts[i] = Mod(i + 1, n);
  if (accept()) return candidate;

  const bool all_equal =
      std::adjacent_find(multiplicities.counts().begin(),
                         multiplicities.counts().end(),
                         std::not_equal_to<>()) == multiplicities.counts().end();
  if (all_equal && k == n) {
    // Every assignment uses all residues, so the weighted sum is a * n(n-1)/2.
    throw Error(ErrorCode::kNoShifts,
                "no distinct shifts avoid a zero weighted sum for n = k = " +
                    std::to_string(n) + " with equal multiplicities");
  }
  if (all_equal) {
    candidate.shifts[k - 1] = Mod(k + 1, n);
    if (accept()) return candidate;
  }

  std::vector<int> values(k);
  std::iota(values.begin(), values.end(), 1);
  long tried = 0;
  do {
    for (int i = 0; i < k; ++i) candidate.shifts[i] = Mod(values[i], n);
    if (accept()) return candidate;
  } while (++tried < kPermutationBudget &&
           std::next_permutation(values.begin(), values.end()));

  // Exhaustive search over tuples of distinct residues.
  std::vector<char> used(n, 0);
  long nodes = 0;
  std::function<bool(int, long)> search = [&](int i, long sum) -> bool {
    if (++nodes > kExhaustiveBudget) return false;
    if (i == k) return Mod(sum, n) != 0;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      candidate.shifts[i] = x;
      if (search(i + 1, sum + static_cast<long>(multiplicities[i]) * x)) {
        return true;
      }
      used[x] = 0;
    }
    return false;
  };
  if (search(0, 0)) return candidate;
  throw Error(ErrorCode::kNoShifts,
              nodes > kExhaustiveBudget
                  ? "shift search budget exhausted"
                  : "no distinct shifts avoid a zero weighted sum");
}

Instance CyclicConstruction(const ShiftVector& shifts) {
  const int n = shifts.modulus;
  if (n < 1 || shifts.shifts.empty()) {
    throw Error(ErrorCode::kRange, "need a positive modulus and shifts");
  }
  std::vector<char> used(n, 0);
  for (int x : shifts.shifts) {
    if (x < 0 || x >= n || used[x]) {
      throw Error(ErrorCode::kRange, "shifts must be distinct residues mod n");
    }
    used[x] = 1;
  }
  std::vector<std::vector<VertexPair>> matchings;
  for (int x : shifts.shifts) {
    std::vector<VertexPair> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, n + Mod(x - i, n)});
    matchings.push_back(std::move(pairs));
  }
  return Instance(n, /*bipartite=*/true, std::move(matchings));
}

Instance K4Construction(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::kRange, "K4 construction needs an even n >= 2");
  }
  std::vector<std::vector<VertexPair>> matchings(3);
  for (int b = 0; b < 2 * n; b += 4) {
    matchings[0].push_back({b, b + 1});
    matchings[0].push_back({b + 2, b + 3});
    matchings[1].push_back({b, b + 2});
    matchings[1].push_back({b + 1, b + 3});
    matchings[2].push_back({b, b + 3});
    matchings[2].push_back({b + 1, b + 2});
  }
  return Instance(n, /*bipartite=*/false, std::move(matchings));
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> cells)
    : cells_(std::move(cells)) {
  const int n = order();
  if (n < 1) throw Error(ErrorCode::kNotLatin, "empty square");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cells_[i].size()) != n) {
      throw Error(ErrorCode::kNotLatin, "row " + std::to_string(i) +
                                            " has the wrong length");
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<char> in_row(n, 0), in_column(n, 0);
    for (int j = 0; j < n; ++j) {
      const int r = cells_[i][j];
      const int c = cells_[j][i];
      if (r < 0 || r >= n || in_row[r]) {
        throw Error(ErrorCode::kNotLatin,
                    "row " + std::to_string(i) + " is not a permutation");
      }
      if (c < 0 || c >= n || in_column[c]) {
        throw Error(ErrorCode::kNotLatin,
                    "column " + std::to_string(i) + " is not a permutation");
      }
      in_row[r] = in_column[c] = 1;
    }
  }
}

Instance LatinToInstance(const LatinSquare& square) {
  const int n = square.order();
  std::vector<std::vector<VertexPair>> matchings(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) matchings[square.at(i, j)].push_back({i, n + j});
  }
  return Instance(n, /*bipartite=*/true, std::move(matchings));
}

LatinSquare InstanceToLatin(const Instance& instance) {
  const int n = instance.half_order();
  if (!instance.bipartite() || instance.colour_count() != n) {
    throw Error(ErrorCode::kNotADecomposition,
                "need a bipartite instance with k = n colours");
  }
  if (!Validate(instance).empty()) {
    throw Error(ErrorCode::kNotADecomposition, "instance is not valid");
  }
  std::vector<std::vector<int>> cells(n, std::vector<int>(n, -1));
  for (Colour c = 1; c <= n; ++c) {
    for (const VertexPair& p : instance.matching(c)) {
      int& cell = cells[p.u][p.v - n];
      if (cell != -1) {
        throw Error(ErrorCode::kNotADecomposition,
                    "pair (" + std::to_string(p.u) + "," + std::to_string(p.v) +
                        ") appears in two colours");
      }
      cell = c - 1;
    }
  }
  return LatinSquare(std::move(cells));
}

LatinSquare CayleyTable(const std::vector<int>& factors) {
  if (factors.empty()) throw Error(ErrorCode::kRange, "empty factor list");
  int order = 1;
  for (int m : factors) {
    if (m < 1) throw Error(ErrorCode::kRange, "factor orders must be >= 1");
    order *= m;
  }
  auto digits = [&](int element) {
    std::vector<int> d(factors.size());
    for (size_t f = factors.size(); f-- > 0;) {
      d[f] = element % factors[f];
      element /= factors[f];
    }
    return d;
  };
  std::vector<std::vector<int>> cells(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    const std::vector<int> da = digits(a);
    for (int b = 0; b < order; ++b) {
      const std::vector<int> db = digits(b);
      int sum = 0;
      for (size_t f = 0; f < factors.size(); ++f) {
        sum = sum * factors[f] + (da[f] + db[f]) % factors[f];
      }
      cells[a][b] = sum;
    }
  }
  return LatinSquare(std::move(cells));
}

Instance ExtendToDecomposition(const Instance& partial) {
  const int n = partial.half_order();
  if (!partial.bipartite() || !Validate(partial).empty()) {
    throw Error(ErrorCode::kPrecondition,
                "extension needs a valid bipartite instance");
  }
  // available[i][j]: pair (i, n+j) not yet used by any colour.
  std::vector<std::vector<char>> available(n, std::vector<char>(n, 1));
  for (Colour c = 1; c <= partial.colour_count(); ++c) {
    for (const VertexPair& p : partial.matching(c)) {
      char& slot = available[p.u][p.v - n];
      if (!slot) {
        throw Error(ErrorCode::kNotDisjoint,
                    "pair (" + std::to_string(p.u) + "," + std::to_string(p.v) +
                        ") used by two colours");
      }
      slot = 0;
    }
  }
  std::vector<std::vector<VertexPair>> matchings = partial.matchings();
  std::vector<int> match_right(n);
  std::vector<char> visited(n);
  std::function<bool(int)> augment = [&](int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (!available[i][j] || visited[j]) continue;
      visited[j] = 1;
      if (match_right[j] == -1 || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  while (static_cast<int>(matchings.size()) < n) {
    std::fill(match_right.begin(), match_right.end(), -1);
    for (int i = 0; i < n; ++i) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(i)) {
        throw std::logic_error("regular bipartite remainder lacks a perfect matching");
      }
    }
    std::vector<VertexPair> pairs;
    for (int j = 0; j < n; ++j) {
      pairs.push_back({match_right[j], n + j});
      available[match_right[j]][j] = 0;
    }
    matchings.push_back(std::move(pairs));
  }
  return Instance(n, /*bipartite=*/true, std::move(matchings));
}

Instance RandomInstance(int n, int k, std::uint64_t seed, bool bipartite) {
  if (n < 1 || k < 1) throw Error(ErrorCode::kRange, "need n >= 1 and k >= 1");
  std::mt19937_64 engine(seed);
  std::vector<std::vector<VertexPair>> matchings(k);
  for (int c = 0; c < k; ++c) {
    if (bipartite) {
      std::vector<Vertex> right(n);
      std::iota(right.begin(), right.end(), n);
      Shuffle(right, engine);
      for (int i = 0; i < n; ++i) matchings[c].push_back({i, right[i]});
    } else {
      std::vector<Vertex> order(2 * n);
      std::iota(order.begin(), order.end(), 0);
      Shuffle(order, engine);
      for (int i = 0; i < 2 * n; i += 2) {
        matchings[c].push_back(MakePair(order[i], order[i + 1]));
      }
    }
  }
  return Instance(n, bipartite, std::move(matchings));
}

std::string SerializeLatinSquare(const LatinSquare& square) {
  std::string out = "{\"order\": " + std::to_string(square.order()) +
                    ", \"cells\": [";
  for (int i = 0; i < square.order(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (int j = 0; j < square.order(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(square.at(i, j));
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

LatinSquare ParseLatinSquare(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("cells")) {
    throw Error(ErrorCode::kParse, "expected fields 'order' and 'cells'");
  }
  if (!doc["order"].is_number_integer() || !doc["cells"].is_array()) {
    throw Error(ErrorCode::kParse, "order must be an integer, cells an array");
  }
  const int order = doc["order"].get<int>();
  const json& rows = doc["cells"];
  if (order < 1 || static_cast<int>(rows.size()) != order) {
    throw Error(ErrorCode::kParse, "cells: expected " + std::to_string(order) +
                                       " rows");
  }
  std::vector<std::vector<int>> cells;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != order) {
      throw Error(ErrorCode::kParse,
                  "cells[" + std::to_string(i) + "]: wrong length");
    }
    std::vector<int> row;
    for (const json& v : rows[i]) {
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::kParse,
                    "cells[" + std::to_string(i) + "]: expected integers");
      }
      row.push_back(v.get<int>());
    }
    cells.push_back(std::move(row));
  }
  return LatinSquare(std::move(cells));
}

}  // namespace trimatch
