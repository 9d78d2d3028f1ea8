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

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace chansim::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

struct Objective {
    std::vector<double> coeffs;
    bool maximize = true;
};

/// Variables are nonnegative unless flagged free.
struct LinearProgram {
    size_t variables = 0;
    std::vector<bool> free;
    std::vector<Constraint> constraints;
    std::optional<Objective> objective;

    bool is_free(size_t v) const { return v < free.size() && free[v]; }
    void add(std::vector<double> coeffs, Relation rel, double rhs) {
        constraints.push_back({std::move(coeffs), rel, rhs});
    }
};

/// One multiplier per constraint, nonnegative for inequalities and free for
/// equalities. Each inequality is read in >= orientation (a <= b contributes
/// -a x >= -b); the combination must give g x >= c with g <= 0 on
/// nonnegative variables, g = 0 on free ones, and c > 0.
struct FarkasCertificate {
    std::vector<double> multipliers;
};

struct Optimal {
    std::vector<double> x;
    double value = 0.0;
};

struct Feasible {
    std::vector<double> x;
};

struct Infeasible {
    FarkasCertificate certificate;
    /// Phase-one optimum: total artificial mass left.
    double residual = 0.0;
};

struct Unbounded {
    std::vector<double> x;
    std::vector<double> ray;
};

using Result = std::variant<Optimal, Feasible, Infeasible, Unbounded>;

inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasibilityTol = 1e-8;

/// Two-phase dense-tableau primal simplex with Bland's rule. Throws
/// Error(NumericalBreakdown) when the pivot budget is exhausted or a pivot
/// degenerates below 1e-11.
Result solve(const LinearProgram &program);

/// Largest violation of any constraint or sign restriction at x.
double max_violation(const LinearProgram &program, std::span<const double> x);

/// Re-multiplies the certificate against the program; independent of the
/// solver.
bool verify_farkas(const LinearProgram &program, const FarkasCertificate &cert, double tol = kFeasibilityTol);

}  // namespace chansim::lp
