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

#include "chansim/transport.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "chansim/error.hpp"

namespace chansim {

std::vector<double> TransportPlan::left_marginal() const {
    std::vector<double> out(left_count, 0.0);
    for (const auto &[edge, amount] : flow) {
        out[static_cast<size_t>(edge.first)] += amount;
    }
    return out;
}

std::vector<double> TransportPlan::right_marginal() const {
    std::vector<double> out(right_count, 0.0);
    for (const auto &[edge, amount] : flow) {
        out[static_cast<size_t>(edge.second)] += amount;
    }
    return out;
}

namespace {

constexpr double kResidualEps = 1e-15;

struct Arc {
    int to;
    double cap;
    int rev;
};

class FlowNetwork {
  public:
    explicit FlowNetwork(size_t nodes) : adj_(nodes) {}

    /// Returns the arc index within adj_[from].
    int add_arc(int from, int to, double cap) {
        auto &a = adj_[static_cast<size_t>(from)];
        auto &b = adj_[static_cast<size_t>(to)];
        a.push_back({to, cap, static_cast<int>(b.size())});
        b.push_back({from, 0.0, static_cast<int>(a.size()) - 1});
        return static_cast<int>(a.size()) - 1;
    }

    double max_flow(int s, int t) {
        double total = 0.0;
        std::vector<std::pair<int, int>> parent(adj_.size());
        while (true) {
            std::fill(parent.begin(), parent.end(), std::make_pair(-1, -1));
            parent[static_cast<size_t>(s)] = {s, -1};
            std::deque<int> queue{s};
            while (!queue.empty() && parent[static_cast<size_t>(t)].first < 0) {
                int u = queue.front();
                queue.pop_front();
                const auto &arcs = adj_[static_cast<size_t>(u)];
                for (size_t e = 0; e < arcs.size(); ++e) {
                    const Arc &arc = arcs[e];
                    if (arc.cap > kResidualEps && parent[static_cast<size_t>(arc.to)].first < 0) {
                        parent[static_cast<size_t>(arc.to)] = {u, static_cast<int>(e)};
                        queue.push_back(arc.to);
                    }
                }
            }
            if (parent[static_cast<size_t>(t)].first < 0) {
                return total;
            }
            double bottleneck = std::numeric_limits<double>::infinity();
            for (int v = t; v != s; v = parent[static_cast<size_t>(v)].first) {
                auto [u, e] = parent[static_cast<size_t>(v)];
                bottleneck = std::min(bottleneck, adj_[static_cast<size_t>(u)][static_cast<size_t>(e)].cap);
            }
            for (int v = t; v != s; v = parent[static_cast<size_t>(v)].first) {
                auto [u, e] = parent[static_cast<size_t>(v)];
                Arc &arc = adj_[static_cast<size_t>(u)][static_cast<size_t>(e)];
                arc.cap -= bottleneck;
                adj_[static_cast<size_t>(arc.to)][static_cast<size_t>(arc.rev)].cap += bottleneck;
            }
            total += bottleneck;
        }
    }

    std::vector<bool> reachable_from(int s) const {
        std::vector<bool> seen(adj_.size(), false);
        seen[static_cast<size_t>(s)] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const Arc &arc : adj_[static_cast<size_t>(u)]) {
                if (arc.cap > kResidualEps && !seen[static_cast<size_t>(arc.to)]) {
                    seen[static_cast<size_t>(arc.to)] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        return seen;
    }

    const Arc &arc(int from, int index) const {
        return adj_[static_cast<size_t>(from)][static_cast<size_t>(index)];
    }

  private:
    std::vector<std::vector<Arc>> adj_;
};

}  // namespace

TransportResult feasible_transport(const TransportInstance &inst) {
    const size_t left = inst.left_supply.size();
    const size_t right = inst.right_demand.size();
    double supply_total = 0.0;
    double demand_total = 0.0;
    for (double s : inst.left_supply) {
        if (!(s >= 0.0)) {
            throw Error(ErrorCode::UnbalancedInstance, "negative or non-finite supply");
        }
        supply_total += s;
    }
    for (double d : inst.right_demand) {
        if (!(d >= 0.0)) {
            throw Error(ErrorCode::UnbalancedInstance, "negative or non-finite demand");
        }
        demand_total += d;
    }
    if (std::abs(supply_total - demand_total) > 1e-9) {
        throw Error(ErrorCode::UnbalancedInstance,
                    "supply " + std::to_string(supply_total) + " != demand " + std::to_string(demand_total));
    }

    const int source = 0;
    const int sink = static_cast<int>(left + right + 1);
    auto left_node = [](int a) { return 1 + a; };
    auto right_node = [left](int b) { return 1 + static_cast<int>(left) + b; };
    const double unbounded = 2.0 * supply_total + 1.0;

    FlowNetwork net(left + right + 2);
    for (size_t a = 0; a < left; ++a) {
        double s = inst.left_supply[a];
        net.add_arc(source, left_node(static_cast<int>(a)), s < kNegligibleSupply ? 0.0 : s);
    }
    std::vector<int> edge_arc(inst.edges.size());
    for (size_t e = 0; e < inst.edges.size(); ++e) {
        auto [a, b] = inst.edges[e];
        if (a < 0 || static_cast<size_t>(a) >= left || b < 0 || static_cast<size_t>(b) >= right) {
            throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
        }
        edge_arc[e] = net.add_arc(left_node(a), right_node(b), unbounded);
    }
    for (size_t b = 0; b < right; ++b) {
        net.add_arc(right_node(static_cast<int>(b)), sink, inst.right_demand[b]);
    }

    double flow = net.max_flow(source, sink);
    if (flow >= demand_total - kTransportTol) {
        TransportPlan plan;
        plan.left_count = left;
        plan.right_count = right;
        for (size_t e = 0; e < inst.edges.size(); ++e) {
            auto [a, b] = inst.edges[e];
            double amount = unbounded - net.arc(left_node(a), edge_arc[e]).cap;
            if (amount > 0.0) {
                plan.flow[{a, b}] += amount;
            }
        }
        return plan;
    }

    // Right nodes outside the source side of the min cut form the violator;
    // their neighbours are all outside it too.
    auto seen = net.reachable_from(source);
    HallViolator v;
    std::vector<bool> in_t(right, false);
    for (size_t b = 0; b < right; ++b) {
        if (!seen[static_cast<size_t>(right_node(static_cast<int>(b)))]) {
            in_t[b] = true;
            v.right_nodes.push_back(static_cast<int>(b));
            v.demand += inst.right_demand[b];
        }
    }
    std::vector<bool> in_n(left, false);
    for (auto [a, b] : inst.edges) {
        if (in_t[static_cast<size_t>(b)]) {
            in_n[static_cast<size_t>(a)] = true;
        }
    }
    for (size_t a = 0; a < left; ++a) {
        if (in_n[a]) {
            v.neighborhood.push_back(static_cast<int>(a));
            v.supply += inst.left_supply[a];
        }
    }
    return v;
}

std::map<int, std::vector<double>> conditional_columns(const TransportPlan &plan, std::span<const double> supply) {
    if (supply.size() != plan.left_count) {
        throw Error(ErrorCode::DimensionMismatch, "supply length does not match plan");
    }
    std::map<int, std::vector<double>> out;
    for (size_t a = 0; a < plan.left_count; ++a) {
        if (supply[a] > kNegligibleSupply) {
            out[static_cast<int>(a)].assign(plan.right_count, 0.0);
        }
    }
    for (const auto &[edge, amount] : plan.flow) {
        auto it = out.find(edge.first);
        if (it != out.end()) {
            it->second[static_cast<size_t>(edge.second)] += amount;
        }
    }
    for (auto &[a, column] : out) {
        double shipped = std::accumulate(column.begin(), column.end(), 0.0);
        if (shipped <= 0.0) {
            throw Error(ErrorCode::ZeroSupplyNode, "left node " + std::to_string(a) + " ships nothing");
        }
        for (auto &v : column) {
            v /= shipped;
        }
    }
    return out;
}

}  // namespace chansim
