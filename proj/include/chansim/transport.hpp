// Copyright 2026 The chansim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace chansim {

/// Bipartite supply-demand problem: mass left_supply[a] must be routed to
/// right nodes along admissible edges so that node b receives right_demand[b].
struct TransportInstance {
    std::vector<double> left_supply;
    std::vector<double> right_demand;
    std::vector<std::pair<int, int>> edges;
};

struct TransportPlan {
    size_t left_count = 0;
    size_t right_count = 0;
    /// (left, right) -> positive amount; supported on instance edges only.
    std::map<std::pair<int, int>, double> flow;

    std::vector<double> left_marginal() const;
    std::vector<double> right_marginal() const;
};

/// Right-node set T whose demand exceeds the supply of its neighbourhood.
struct HallViolator {
    std::vector<int> right_nodes;
    std::vector<int> neighborhood;
    double demand = 0.0;
    double supply = 0.0;
};

using TransportResult = std::variant<TransportPlan, HallViolator>;

inline constexpr double kTransportTol = 1e-8;
inline constexpr double kNegligibleSupply = 1e-12;

/// Edmonds-Karp max flow on source -> left (supply) -> right (unbounded on
/// edges) -> sink (demand). Feasible iff the flow reaches the total demand
/// within 1e-8; otherwise the unreached side of the min cut is returned.
/// Throws UnbalancedInstance when supplies and demands differ by > 1e-9.
TransportResult feasible_transport(const TransportInstance &inst);

/// Row-normalized plan: for each left node with supply > 1e-12 the
/// distribution of its mass over right nodes. Throws ZeroSupplyNode when such
/// a node ships nothing.
std::map<int, std::vector<double>> conditional_columns(const TransportPlan &plan, std::span<const double> supply);

}  // namespace chansim
