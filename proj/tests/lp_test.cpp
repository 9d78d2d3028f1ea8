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

#include "chansim/lp.hpp"

#include <gtest/gtest.h>

#include <random>

#include "chansim/error.hpp"
#include "oracles.hpp"

using namespace chansim;
using namespace chansim::lp;

TEST(lp, single_variable_max) {
    LinearProgram p;
    p.variables = 1;
    p.add({1}, Relation::LessEqual, 3);
    p.objective = Objective{{1}, true};
    auto r = solve(p);
    ASSERT_TRUE(std::holds_alternative<Optimal>(r));
    EXPECT_NEAR(std::get<Optimal>(r).x[0], 3, 1e-12);
    EXPECT_NEAR(std::get<Optimal>(r).value, 3, 1e-12);
}

TEST(lp, contradictory_bounds_certificate) {
    LinearProgram p;
    p.variables = 1;
    p.free = {true};
    p.add({1}, Relation::GreaterEqual, 1);
    p.add({1}, Relation::LessEqual, 0);
    auto r = solve(p);
    ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
    const auto &cert = std::get<Infeasible>(r).certificate;
    ASSERT_EQ(cert.multipliers.size(), 2u);
    EXPECT_NEAR(cert.multipliers[0], 1, 1e-12);
    EXPECT_NEAR(cert.multipliers[1], 1, 1e-12);
    EXPECT_TRUE(verify_farkas(p, cert));
}

TEST(lp, forged_certificate_rejected) {
    LinearProgram p;
    p.variables = 1;
    p.add({1}, Relation::LessEqual, 3);
    EXPECT_FALSE(verify_farkas(p, FarkasCertificate{{1}}));
    EXPECT_FALSE(verify_farkas(p, FarkasCertificate{{1, 2}}));
}

TEST(lp, unbounded_ray) {
    LinearProgram p;
    p.variables = 2;
    p.add({1, -1}, Relation::LessEqual, 1);
    p.objective = Objective{{1, 0}, true};
    auto r = solve(p);
    ASSERT_TRUE(std::holds_alternative<Unbounded>(r));
    const auto &u = std::get<Unbounded>(r);
    EXPECT_LE(max_violation(p, u.x), 1e-9);
    EXPECT_GT(u.ray[0], 0.0);
    EXPECT_LE(u.ray[0] - u.ray[1], 1e-12);
    EXPECT_GE(u.ray[1], -1e-12);
}

TEST(lp, minimize_with_equality_and_free_variable) {
    // min x + y, x - y = 1 with y free and x >= 0, x + y >= -3.
    LinearProgram p;
    p.variables = 2;
    p.free = {false, true};
    p.add({1, -1}, Relation::Equal, 1);
    p.add({1, 1}, Relation::GreaterEqual, -3);
    p.objective = Objective{{1, 1}, false};
    auto r = solve(p);
    ASSERT_TRUE(std::holds_alternative<Optimal>(r));
    const auto &o = std::get<Optimal>(r);
    EXPECT_NEAR(o.value, -1, 1e-9);
    EXPECT_NEAR(o.x[0], 0, 1e-9);
    EXPECT_NEAR(o.x[1], -1, 1e-9);
}

TEST(lp, feasibility_without_objective) {
    LinearProgram p;
    p.variables = 3;
    p.add({1, 1, 1}, Relation::Equal, 1);
    p.add({1, 0, 0}, Relation::GreaterEqual, 0.2);
    auto r = solve(p);
    ASSERT_TRUE(std::holds_alternative<Feasible>(r));
    EXPECT_LE(max_violation(p, std::get<Feasible>(r).x), 1e-9);
}

TEST(lp, random_against_vertex_enumeration) {
    // Boxed random programs: 0 <= x <= 1 plus random cuts. Optimum must match
    // the best basic point; infeasible cases must carry verified certificates.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> nv(1, 4), nc(1, 6);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = static_cast<size_t>(nv(rng));
        const auto m = static_cast<size_t>(nc(rng));
        LinearProgram p;
        p.variables = n;
        std::vector<oracle::HalfSpace> rows;
        for (size_t v = 0; v < n; ++v) {
            std::vector<double> e(n, 0.0);
            e[v] = 1.0;
            p.add(e, Relation::LessEqual, 1.0);
            rows.push_back({e, 1.0});
            e[v] = -1.0;
            rows.push_back({e, 0.0});
        }
        for (size_t c = 0; c < m; ++c) {
            std::vector<double> a(n);
            for (auto &x : a) {
                x = coef(rng);
            }
            double b = coef(rng) * 0.6;
            if (c % 2 == 0) {
                p.add(a, Relation::LessEqual, b);
                rows.push_back({a, b});
            } else {
                p.add(a, Relation::GreaterEqual, b);
                std::vector<double> neg(a);
                for (auto &x : neg) {
                    x = -x;
                }
                rows.push_back({neg, -b});
            }
        }
        std::vector<double> obj(n);
        for (auto &x : obj) {
            x = coef(rng);
        }
        p.objective = Objective{obj, true};
        auto want = oracle::vertex_enumeration_max(rows, obj, 1e-9);
        auto got = solve(p);
        if (auto *o = std::get_if<Optimal>(&got)) {
            ASSERT_TRUE(want.has_value());
            EXPECT_NEAR(o->value, *want, 1e-7);
            EXPECT_LE(max_violation(p, o->x), 1e-8);
            ++optimal;
        } else {
            ASSERT_TRUE(std::holds_alternative<Infeasible>(got));
            auto loose = oracle::vertex_enumeration_max(rows, obj, 1e-7);
            EXPECT_FALSE(loose.has_value());
            EXPECT_TRUE(verify_farkas(p, std::get<Infeasible>(got).certificate));
            ++infeasible;
        }
    }
    EXPECT_GT(optimal, 50);
    EXPECT_GT(infeasible, 20);
}

TEST(lp, malformed_program_rejected) {
    LinearProgram p;
    p.variables = 2;
    p.add({1}, Relation::LessEqual, 1);
    EXPECT_THROW(solve(p), Error);
}
