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

#include <algorithm>
#include <cmath>
#include <string>

#include "chansim/error.hpp"

namespace chansim::lp {

namespace {

enum class ColumnKind { Structural, Slack, Artificial };

struct Column {
    ColumnKind kind;
    /// Original variable for structural columns, row for slack/artificial.
    size_t owner;
    /// -1 for the negative half of a split free variable.
    double sign = 1.0;
};

class Tableau {
  public:
    Tableau(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0), b_(rows, 0.0) {}

    double &at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    double at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    double &rhs(size_t r) { return b_[r]; }
    double rhs(size_t r) const { return b_[r]; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    void pivot(size_t pr, size_t pc, std::vector<double> &reduced, double &objective) {
        double p = at(pr, pc);
        if (std::abs(p) < 1e-11) {
            throw Error(ErrorCode::NumericalBreakdown, "pivot magnitude below 1e-11");
        }
        double inv = 1.0 / p;
        double *prow = &a_[pr * cols_];
        for (size_t c = 0; c < cols_; ++c) {
            prow[c] *= inv;
        }
        prow[pc] = 1.0;
        b_[pr] *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == pr) {
                continue;
            }
            double f = at(r, pc);
            if (f == 0.0) {
                continue;
            }
            double *row = &a_[r * cols_];
            for (size_t c = 0; c < cols_; ++c) {
                row[c] -= f * prow[c];
            }
            row[pc] = 0.0;
            b_[r] -= f * b_[pr];
        }
        double f = reduced[pc];
        if (f != 0.0) {
            for (size_t c = 0; c < cols_; ++c) {
                reduced[c] -= f * prow[c];
            }
            reduced[pc] = 0.0;
            objective -= f * b_[pr];
        }
    }

  private:
    size_t rows_;
    size_t cols_;
    std::vector<double> a_;
    std::vector<double> b_;
};

struct Standardized {
    std::vector<Column> columns;
    std::vector<double> row_sign;
    std::vector<size_t> initial_basis;
    Tableau tableau{0, 0};
};

Standardized standardize(const LinearProgram &program) {
    const size_t m = program.constraints.size();
    Standardized s;
    for (size_t v = 0; v < program.variables; ++v) {
        s.columns.push_back({ColumnKind::Structural, v, 1.0});
        if (program.is_free(v)) {
            s.columns.push_back({ColumnKind::Structural, v, -1.0});
        }
    }
    s.row_sign.assign(m, 1.0);
    std::vector<long> slack_of(m, -1);
    for (size_t r = 0; r < m; ++r) {
        const auto &con = program.constraints[r];
        if (con.coeffs.size() != program.variables) {
            throw Error(ErrorCode::DimensionMismatch, "constraint " + std::to_string(r) + " has wrong length");
        }
        if (!std::isfinite(con.rhs)) {
            throw Error(ErrorCode::InvalidInput, "non-finite right-hand side");
        }
        bool flip = con.rhs < 0.0 || (con.rhs == 0.0 && con.relation == Relation::GreaterEqual);
        s.row_sign[r] = flip ? -1.0 : 1.0;
        if (con.relation != Relation::Equal) {
            slack_of[r] = static_cast<long>(s.columns.size());
            s.columns.push_back({ColumnKind::Slack, r, 1.0});
        }
    }
    s.initial_basis.assign(m, 0);
    std::vector<bool> needs_artificial(m, true);
    for (size_t r = 0; r < m; ++r) {
        const auto &con = program.constraints[r];
        double slack_coeff = con.relation == Relation::LessEqual ? 1.0 : -1.0;
        if (slack_of[r] >= 0 && slack_coeff * s.row_sign[r] > 0.0) {
            s.initial_basis[r] = static_cast<size_t>(slack_of[r]);
            needs_artificial[r] = false;
        }
    }
    for (size_t r = 0; r < m; ++r) {
        if (needs_artificial[r]) {
            s.initial_basis[r] = s.columns.size();
            s.columns.push_back({ColumnKind::Artificial, r, 1.0});
        }
    }

    s.tableau = Tableau(m, s.columns.size());
    for (size_t r = 0; r < m; ++r) {
        const auto &con = program.constraints[r];
        for (size_t c = 0; c < s.columns.size(); ++c) {
            const Column &col = s.columns[c];
            double v = 0.0;
            switch (col.kind) {
                case ColumnKind::Structural:
                    v = col.sign * con.coeffs[col.owner];
                    if (!std::isfinite(v)) {
                        throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
                    }
                    break;
                case ColumnKind::Slack:
                    if (col.owner == r) {
                        v = con.relation == Relation::LessEqual ? 1.0 : -1.0;
                    }
                    break;
                case ColumnKind::Artificial:
                    v = col.owner == r ? 1.0 : 0.0;
                    break;
            }
            s.tableau.at(r, c) = col.kind == ColumnKind::Artificial ? v : s.row_sign[r] * v;
        }
        s.tableau.rhs(r) = s.row_sign[r] * con.rhs;
    }
    return s;
}

enum class Outcome { Optimal, Unbounded };

/// Minimizes with the given reduced-cost row; returns the entering column on
/// unboundedness through unbounded_col.
Outcome run_simplex(Tableau &t, std::vector<size_t> &basis, std::vector<double> &reduced, double &objective,
                    const std::vector<bool> &may_enter, size_t &unbounded_col) {
    const size_t max_pivots = 50 * (t.rows() + t.cols()) + 1000;
    for (size_t iter = 0; iter < max_pivots; ++iter) {
        size_t enter = t.cols();
        for (size_t c = 0; c < t.cols(); ++c) {
            if (may_enter[c] && reduced[c] < -kPivotTol) {
                enter = c;
                break;
            }
        }
        if (enter == t.cols()) {
            return Outcome::Optimal;
        }
        size_t leave = t.rows();
        double best = 0.0;
        for (size_t r = 0; r < t.rows(); ++r) {
            double a = t.at(r, enter);
            if (a > kPivotTol) {
                double ratio = t.rhs(r) / a;
                if (leave == t.rows() || ratio < best - 1e-12 ||
                    (ratio <= best + 1e-12 && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave == t.rows()) {
            unbounded_col = enter;
            return Outcome::Unbounded;
        }
        t.pivot(leave, enter, reduced, objective);
        basis[leave] = enter;
        // Clean tiny negative basic values produced by roundoff.
        for (size_t r = 0; r < t.rows(); ++r) {
            if (t.rhs(r) < 0.0 && t.rhs(r) > -1e-12) {
                t.rhs(r) = 0.0;
            }
        }
    }
    throw Error(ErrorCode::NumericalBreakdown, "simplex pivot budget exhausted");
}

std::vector<double> extract_point(const LinearProgram &program, const Standardized &s, const std::vector<size_t> &basis) {
    std::vector<double> x(program.variables, 0.0);
    for (size_t r = 0; r < basis.size(); ++r) {
        const Column &col = s.columns[basis[r]];
        if (col.kind == ColumnKind::Structural) {
            x[col.owner] += col.sign * s.tableau.rhs(r);
        }
    }
    return x;
}

}  // namespace

Result solve(const LinearProgram &program) {
    if (program.objective && program.objective->coeffs.size() != program.variables) {
        throw Error(ErrorCode::DimensionMismatch, "objective has wrong length");
    }
    Standardized s = standardize(program);
    Tableau &t = s.tableau;
    const size_t m = t.rows();
    const size_t cols = t.cols();
    std::vector<size_t> basis = s.initial_basis;

    // Phase one: minimize the sum of artificial variables.
    std::vector<double> cost1(cols, 0.0);
    for (size_t c = 0; c < cols; ++c) {
        if (s.columns[c].kind == ColumnKind::Artificial) {
            cost1[c] = 1.0;
        }
    }
    std::vector<double> reduced = cost1;
    double objective = 0.0;
    for (size_t r = 0; r < m; ++r) {
        if (cost1[basis[r]] != 0.0) {
            for (size_t c = 0; c < cols; ++c) {
                reduced[c] -= t.at(r, c);
            }
            objective -= t.rhs(r);
        }
    }
    std::vector<bool> may_enter(cols, true);
    size_t unbounded_col = 0;
    run_simplex(t, basis, reduced, objective, may_enter, unbounded_col);

    double residual = 0.0;
    for (size_t r = 0; r < m; ++r) {
        if (s.columns[basis[r]].kind == ColumnKind::Artificial) {
            residual += t.rhs(r);
        }
    }
    if (residual > kFeasibilityTol) {
        // Phase-one duals y_r = c_init - reduced_init are a Farkas vector for
        // the sign-normalized rows.
        Infeasible inf;
        inf.residual = residual;
        inf.certificate.multipliers.assign(m, 0.0);
        double scale = 0.0;
        for (size_t r = 0; r < m; ++r) {
            size_t c = s.initial_basis[r];
            double y = cost1[c] - reduced[c];
            double z = y * s.row_sign[r];
            double mult = program.constraints[r].relation == Relation::LessEqual ? -z : z;
            inf.certificate.multipliers[r] = mult;
            scale = std::max(scale, std::abs(mult));
        }
        if (scale > 0.0) {
            for (auto &v : inf.certificate.multipliers) {
                v /= scale;
            }
        }
        return inf;
    }

    // Drive zero-level artificials out of the basis where possible.
    for (size_t r = 0; r < m; ++r) {
        if (s.columns[basis[r]].kind != ColumnKind::Artificial) {
            continue;
        }
        size_t best = cols;
        double mag = 1e-9;
        for (size_t c = 0; c < cols; ++c) {
            if (s.columns[c].kind != ColumnKind::Artificial && std::abs(t.at(r, c)) > mag) {
                mag = std::abs(t.at(r, c));
                best = c;
            }
        }
        if (best < cols) {
            t.pivot(r, best, reduced, objective);
            basis[r] = best;
        }
    }

    if (!program.objective) {
        return Feasible{extract_point(program, s, basis)};
    }

    // Phase two on the original objective, posed as a minimization.
    const double dir = program.objective->maximize ? -1.0 : 1.0;
    std::vector<double> cost2(cols, 0.0);
    for (size_t c = 0; c < cols; ++c) {
        const Column &col = s.columns[c];
        if (col.kind == ColumnKind::Structural) {
            cost2[c] = dir * col.sign * program.objective->coeffs[col.owner];
        }
        may_enter[c] = col.kind != ColumnKind::Artificial;
    }
    reduced = cost2;
    objective = 0.0;
    for (size_t r = 0; r < m; ++r) {
        double cb = cost2[basis[r]];
        if (cb != 0.0) {
            for (size_t c = 0; c < cols; ++c) {
                reduced[c] -= cb * t.at(r, c);
            }
            objective -= cb * t.rhs(r);
        }
    }
    if (run_simplex(t, basis, reduced, objective, may_enter, unbounded_col) == Outcome::Unbounded) {
        Unbounded u;
        u.x = extract_point(program, s, basis);
        u.ray.assign(program.variables, 0.0);
        const Column &enter = s.columns[unbounded_col];
        if (enter.kind == ColumnKind::Structural) {
            u.ray[enter.owner] += enter.sign;
        }
        for (size_t r = 0; r < m; ++r) {
            const Column &col = s.columns[basis[r]];
            if (col.kind == ColumnKind::Structural) {
                u.ray[col.owner] -= col.sign * t.at(r, unbounded_col);
            }
        }
        return u;
    }
    Optimal opt;
    opt.x = extract_point(program, s, basis);
    opt.value = 0.0;
    for (size_t v = 0; v < program.variables; ++v) {
        opt.value += program.objective->coeffs[v] * opt.x[v];
    }
    return opt;
}

double max_violation(const LinearProgram &program, std::span<const double> x) {
    if (x.size() != program.variables) {
        throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
    }
    double worst = 0.0;
    for (size_t v = 0; v < program.variables; ++v) {
        if (!program.is_free(v)) {
            worst = std::max(worst, -x[v]);
        }
    }
    for (const auto &con : program.constraints) {
        double lhs = 0.0;
        for (size_t v = 0; v < program.variables; ++v) {
            lhs += con.coeffs[v] * x[v];
        }
        switch (con.relation) {
            case Relation::LessEqual: worst = std::max(worst, lhs - con.rhs); break;
            case Relation::GreaterEqual: worst = std::max(worst, con.rhs - lhs); break;
            case Relation::Equal: worst = std::max(worst, std::abs(lhs - con.rhs)); break;
        }
    }
    return worst;
}

bool verify_farkas(const LinearProgram &program, const FarkasCertificate &cert, double tol) {
    if (cert.multipliers.size() != program.constraints.size()) {
        return false;
    }
    std::vector<double> g(program.variables, 0.0);
    double c = 0.0;
    for (size_t r = 0; r < program.constraints.size(); ++r) {
        const auto &con = program.constraints[r];
        double mult = cert.multipliers[r];
        if (!std::isfinite(mult)) {
            return false;
        }
        if (con.relation != Relation::Equal && mult < -tol) {
            return false;
        }
        double oriented = con.relation == Relation::LessEqual ? -mult : mult;
        for (size_t v = 0; v < program.variables; ++v) {
            g[v] += oriented * con.coeffs[v];
        }
        c += oriented * con.rhs;
    }
    for (size_t v = 0; v < program.variables; ++v) {
        if (program.is_free(v) ? std::abs(g[v]) > tol : g[v] > tol) {
            return false;
        }
    }
    return c > tol;
}

}  // namespace chansim::lp
