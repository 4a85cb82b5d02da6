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

#include "trimatch/oracle.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trimatch {
namespace {

void CheckGuard(const Instance& instance, int limit, const OracleLimits& limits,
                const char* what) {
  if (!limits.override_guard && instance.vertex_count() > limit) {
    throw Error(ErrorCode::kGuardExceeded,
                std::string(what) + " is limited to " + std::to_string(limit) +
                    " vertices (instance has " +
                    std::to_string(instance.vertex_count()) +
                    "); set the guard override to lift this");
  }
}

// Exact-profile search with per-colour capacities.
class ExactSearch {
 public:
  ExactSearch(const Instance& instance, const Distribution& target)
      : instance_(instance),
        vertices_(instance.vertex_count()),
        covered_(vertices_, 0),
        remaining_(target.counts()),
        needed_(target.total()),
        skip_budget_(vertices_ - 2 * target.total()) {}

  bool Run() { return Visit(0); }
  const std::vector<ColouredEdge>& edges() const { return edges_; }

 private:
  bool Visit(Vertex v) {
    if (needed_ == 0) return true;
    while (v < vertices_ && covered_[v]) ++v;
    if (v == vertices_) return false;
    covered_[v] = 1;
    for (Colour c = 1; c <= instance_.colour_count(); ++c) {
      if (remaining_[c - 1] == 0) continue;
      const Vertex u = instance_.partner_unchecked(c, v);
      if (u == kNoVertex || covered_[u]) continue;
      covered_[u] = 1;
      --remaining_[c - 1];
      --needed_;
      edges_.push_back(MakeEdge(v, u, c));
      if (Visit(v + 1)) return true;
      edges_.pop_back();
      ++needed_;
      ++remaining_[c - 1];
      covered_[u] = 0;
    }
    if (skip_budget_ > 0) {
      --skip_budget_;
      if (Visit(v + 1)) return true;
      ++skip_budget_;
    }
    covered_[v] = 0;
    return false;
  }

  const Instance& instance_;
  const int vertices_;
  std::vector<char> covered_;
  std::vector<int> remaining_;
  int needed_;
  int skip_budget_;
  std::vector<ColouredEdge> edges_;
};

// Visits every matching with exactly `size` edges.
template <typename Visitor>
class SizeEnumeration {
 public:
  SizeEnumeration(const PartnerTableView& table, int size, Visitor& visitor)
      : table_(table),
        vertices_(2 * table.half_order),
        covered_(vertices_, 0),
        needed_(size),
        skip_budget_(vertices_ - 2 * size),
        visitor_(visitor) {}

  void Run() { Visit(0); }

 private:
  // Returns false to stop the whole enumeration.
  bool Visit(Vertex v) {
    if (needed_ == 0) return visitor_(edges_);
    while (v < vertices_ && covered_[v]) ++v;
    if (v == vertices_) return true;
    covered_[v] = 1;
    const Vertex* row = table_.partners.data();
    for (Colour c = 1; c <= table_.colour_count; ++c, row += vertices_) {
      const Vertex u = row[v];
      if (u == kNoVertex || covered_[u]) continue;
      covered_[u] = 1;
      --needed_;
      edges_.push_back(MakeEdge(v, u, c));
      const bool go_on = Visit(v + 1);
      edges_.pop_back();
      ++needed_;
      covered_[u] = 0;
      if (!go_on) {
        covered_[v] = 0;
        return false;
      }
    }
    bool go_on = true;
    if (skip_budget_ > 0) {
      --skip_budget_;
      go_on = Visit(v + 1);
      ++skip_budget_;
    }
    covered_[v] = 0;
    return go_on;
  }

  const PartnerTableView& table_;
  const int vertices_;
  std::vector<char> covered_;
  int needed_;
  int skip_budget_;
  std::vector<ColouredEdge> edges_;
  Visitor& visitor_;
};

PartnerTableView ViewOf(const Instance& instance) {
  return {instance.half_order(), instance.colour_count(),
          instance.partner_table()};
}

void CheckTarget(const Instance& instance, const Distribution& target) {
  if (target.size() != instance.colour_count()) {
    throw Error(ErrorCode::kRange,
                "target has " + std::to_string(target.size()) +
                    " entries, instance has " +
                    std::to_string(instance.colour_count()) + " colours");
  }
  for (int a : target.counts()) {
    if (a < 0) throw Error(ErrorCode::kRange, "target entries must be >= 0");
  }
  if (target.total() > instance.half_order()) {
    throw Error(ErrorCode::kRange, "target sum exceeds n");
  }
}

nlohmann::json EdgesJson(const Matching& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const ColouredEdge& e : m.edges()) out.push_back({e.u, e.v, e.colour});
  return out;
}

}  // namespace

std::optional<Matching> ExistsExact(const Instance& instance,
                                    const Distribution& target,
                                    const OracleLimits& limits) {
  CheckTarget(instance, target);
  CheckGuard(instance, limits.max_vertices_exists, limits, "exact search");
  ExactSearch search(instance, target);
  if (!search.Run()) return std::nullopt;
  Matching witness(search.edges());
  if (!ValidateMatching(instance, witness).empty() ||
      ComputeDistribution(instance, witness) != target) {
    throw std::logic_error("oracle produced an invalid witness");
  }
  return witness;
}

RealizabilityReport AchievableDistributions(const Instance& instance, int size,
                                            const OracleLimits& limits) {
  if (size < 0 || size > instance.half_order()) {
    throw Error(ErrorCode::kRange, "size must lie in [0, n]");
  }
  CheckGuard(instance, limits.max_vertices_report, limits, "full report");
  RealizabilityReport report;
  report.half_order = instance.half_order();
  report.colour_count = instance.colour_count();
  report.size = size;
  auto visitor = [&](const std::vector<ColouredEdge>& edges) {
    Distribution d = Distribution::Zero(instance.colour_count());
    for (const ColouredEdge& e : edges) ++d[e.colour - 1];
    report.achievable.try_emplace(std::move(d), Matching(edges));
    return true;
  };
  const PartnerTableView view = ViewOf(instance);
  SizeEnumeration<decltype(visitor)> enumeration(view, size, visitor);
  enumeration.Run();
  return report;
}

std::string SerializeReport(const RealizabilityReport& report) {
  nlohmann::json doc;
  doc["n"] = report.half_order;
  doc["k"] = report.colour_count;
  doc["size"] = report.size;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [d, witness] : report.achievable) {
    list.push_back({{"distribution", d.counts()}, {"witness", EdgesJson(witness)}});
  }
  doc["achievable"] = std::move(list);
  if (report.queried) {
    doc["queried"] = {{"distribution", report.queried->counts()},
                      {"found", report.queried_found}};
  }
  return doc.dump() + "\n";
}

std::string FormatReportTable(const RealizabilityReport& report) {
  std::ostringstream out;
  out << "n=" << report.half_order << " k=" << report.colour_count
      << " size=" << report.size << ": " << report.achievable.size()
      << " achievable distributions\n";
  for (const auto& [d, witness] : report.achievable) {
    out << "  " << d.ToString() << "  witness";
    for (const ColouredEdge& e : witness.edges()) {
      out << ' ' << e.u << '-' << e.v << ':' << e.colour;
    }
    out << '\n';
  }
  if (report.queried) {
    out << "queried " << report.queried->ToString() << ": "
        << (report.queried_found ? "achievable" : "not achievable") << '\n';
  }
  return out.str();
}

int DistributionCode(const Distribution& d, int size) {
  int code = 0;
  for (int a : d.counts()) code = code * (size + 1) + a;
  return code;
}

int DistributionCodeSpace(int colour_count, int size) {
  long space = 1;
  for (int c = 0; c < colour_count; ++c) {
    space *= size + 1;
    if (space > (1L << 26)) {
      throw Error(ErrorCode::kGuardExceeded, "distribution code space too large");
    }
  }
  return static_cast<int>(space);
}

int ScanDistributions(const PartnerTableView& table, int size, int stop_at,
                      std::vector<char>& seen) {
  const int space = DistributionCodeSpace(table.colour_count, size);
  seen.assign(space, 0);
  std::vector<int> weight(table.colour_count);
  int w = 1;
  for (int c = table.colour_count; c-- > 0;) {
    weight[c] = w;
    w *= size + 1;
  }
  int distinct = 0;
  auto visitor = [&](const std::vector<ColouredEdge>& edges) {
    int code = 0;
    for (const ColouredEdge& e : edges) code += weight[e.colour - 1];
    if (!seen[code]) {
      seen[code] = 1;
      ++distinct;
    }
    return distinct < stop_at;
  };
  SizeEnumeration<decltype(visitor)> enumeration(table, size, visitor);
  enumeration.Run();
  return distinct;
}

}  // namespace trimatch
