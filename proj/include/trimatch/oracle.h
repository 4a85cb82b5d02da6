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

// Brute-force ground truth for small instances. All searches visit vertices
// in increasing id; at the smallest uncovered vertex they branch on each
// incident edge whose colour still has capacity, then on leaving the vertex
// unmatched while the unmatched budget allows it.

#ifndef TRIMATCH_ORACLE_H_
#define TRIMATCH_ORACLE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trimatch/graphcore.h"

namespace trimatch {

// Instance-size guards; exceeding one throws kGuardExceeded unless
// override_guard is set.
struct OracleLimits {
  int max_vertices_exists = 24;
  int max_vertices_report = 16;
  bool override_guard = false;
};

// A witness M with ComputeDistribution(M) == target, or nullopt if none
// exists. Throws kRange if target has the wrong length, a negative entry, or
// total above n.
std::optional<Matching> ExistsExact(const Instance& instance,
                                    const Distribution& target,
                                    const OracleLimits& limits = {});

struct RealizabilityReport {
  int half_order = 0;
  int colour_count = 0;
  int size = 0;
  // Every distribution of a matching with exactly `size` edges, with the
  // first witness found.
  std::map<Distribution, Matching> achievable;
  std::optional<Distribution> queried;
  bool queried_found = false;
};

RealizabilityReport AchievableDistributions(const Instance& instance, int size,
                                            const OracleLimits& limits = {});

// Machine form (JSON) and a human-readable table.
std::string SerializeReport(const RealizabilityReport& report);
std::string FormatReportTable(const RealizabilityReport& report);

// Raw partner table as laid out by Instance::partner_table().
struct PartnerTableView {
  int half_order = 0;
  int colour_count = 0;
  std::span<const Vertex> partners;
};

// Distribution code used by ScanDistributions: mixed radix with base size+1,
// colour 1 most significant.
int DistributionCode(const Distribution& d, int size);
int DistributionCodeSpace(int colour_count, int size);

// Sets seen[code] for every distribution realised by a matching of exactly
// `size` edges and returns how many distinct codes were set. Stops as soon
// as `stop_at` distinct codes are seen. `seen` is resized and cleared.
int ScanDistributions(const PartnerTableView& table, int size, int stop_at,
                      std::vector<char>& seen);

}  // namespace trimatch

#endif  // TRIMATCH_ORACLE_H_
