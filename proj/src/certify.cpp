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

#include "chansim/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chansim/error.hpp"
#include "chansim/lp.hpp"
#include "chansim/majorize.hpp"

namespace chansim {

namespace {

double entropy_bits(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

/// Rank of the vertex differences by Gaussian elimination.
size_t affine_rank(const std::vector<std::vector<double>> &vertices) {
    if (vertices.size() < 2) {
        return 0;
    }
    const size_t dim = vertices.front().size();
    std::vector<std::vector<double>> rows;
    for (size_t i = 1; i < vertices.size(); ++i) {
        std::vector<double> row(dim);
        for (size_t c = 0; c < dim; ++c) {
            row[c] = vertices[i][c] - vertices[0][c];
        }
        rows.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t c = 0; c < dim && rank < rows.size(); ++c) {
        size_t best = rank;
        for (size_t r = rank; r < rows.size(); ++r) {
            if (std::abs(rows[r][c]) > std::abs(rows[best][c])) {
                best = r;
            }
        }
        if (std::abs(rows[best][c]) < 1e-9) {
            continue;
        }
        std::swap(rows[rank], rows[best]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            double f = rows[r][c] / rows[rank][c];
            for (size_t cc = c; cc < dim; ++cc) {
                rows[r][cc] -= f * rows[rank][cc];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Polytope Polytope::octahedron() {
    Polytope p;
    for (int axis = 0; axis < 3; ++axis) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> v(3, 0.0);
            v[static_cast<size_t>(axis)] = sign;
            p.vertices.push_back(v);
        }
    }
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<double> a(3);
        for (int c = 0; c < 3; ++c) {
            a[static_cast<size_t>(c)] = (mask & (1 << c)) ? -1.0 : 1.0;
        }
        p.facets.push_back({a, 1.0});
    }
    return p;
}

Polytope Polytope::simplex(int d) {
    if (d < 1) {
        throw Error(ErrorCode::BadRange, "simplex dimension must be positive");
    }
    const auto n = static_cast<size_t>(d);
    Polytope p;
    p.vertices.emplace_back(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        std::vector<double> v(n, 0.0);
        v[i] = 1.0;
        p.vertices.push_back(v);
        std::vector<double> a(n, 0.0);
        a[i] = -1.0;
        p.facets.push_back({a, 0.0});
    }
    p.facets.push_back({std::vector<double>(n, 1.0), 1.0});
    return p;
}

Polytope Polytope::cube(int d) {
    if (d < 1 || d > 20) {
        throw Error(ErrorCode::BadRange, "cube dimension must lie in [1, 20]");
    }
    const auto n = static_cast<size_t>(d);
    Polytope p;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<double> v(n);
        for (size_t c = 0; c < n; ++c) {
            v[c] = (mask & (1u << c)) ? -1.0 : 1.0;
        }
        p.vertices.push_back(v);
    }
    for (size_t c = 0; c < n; ++c) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> a(n, 0.0);
            a[c] = sign;
            p.facets.push_back({a, 1.0});
        }
    }
    return p;
}

void validate_polytope(const Polytope &p, double tol) {
    if (p.vertices.empty() || p.facets.empty()) {
        throw Error(ErrorCode::InvalidPolytope, "polytope needs vertices and facets");
    }
    const size_t dim = p.dimension();
    for (const auto &v : p.vertices) {
        if (v.size() != dim) {
            throw Error(ErrorCode::InvalidPolytope, "vertices have differing dimensions");
        }
    }
    for (size_t j = 0; j < p.facets.size(); ++j) {
        const auto &f = p.facets[j];
        if (f.normal.size() != dim) {
            throw Error(ErrorCode::InvalidPolytope, "facet normal has the wrong dimension");
        }
        for (size_t i = 0; i < p.vertices.size(); ++i) {
            if (dot(f.normal, p.vertices[i]) > f.offset + tol) {
                throw Error(ErrorCode::InvalidPolytope,
                            "vertex " + std::to_string(i) + " violates facet " + std::to_string(j));
            }
        }
    }
}

double storability(std::span<const TransitionMatrix> matrices) {
    if (matrices.empty()) {
        throw Error(ErrorCode::EmptyInput, "no matrices supplied");
    }
    const size_t k = matrices.front().k();
    double best = 0.0;
    for (const auto &a : matrices) {
        if (a.k() != k) {
            throw Error(ErrorCode::DimensionMismatch, "matrices disagree on the number of outputs");
        }
        double sum = 0.0;
        for (size_t i = 0; i < k; ++i) {
            double row_max = 0.0;
            for (size_t j = 0; j < a.l(); ++j) {
                row_max = std::max(row_max, a(i, j));
            }
            sum += row_max;
        }
        best = std::max(best, sum);
    }
    return best;
}

double storability(const TransitionMatrix &a) { return storability(std::span<const TransitionMatrix>(&a, 1)); }

WitnessReport subset_witness(const TransitionMatrix &a, int r, int d) {
    const auto k = static_cast<int>(a.k());
    if (r < 1 || r > k || d < 1 || d > k) {
        throw Error(ErrorCode::BadRange, "need 1 <= r <= k and 1 <= d <= k");
    }
    WitnessReport rep;
    rep.relation = Relation::AtLeast;
    rep.r = r;
    rep.d = d;
    rep.k = k;
    rep.n = static_cast<int>(a.l());
    for (const auto &subset : enumerate_subsets(k, r)) {
        double low = INFINITY;
        for (size_t j = 0; j < a.l(); ++j) {
            double s = 0.0;
            for (int i : subset) {
                s += a(static_cast<size_t>(i), j);
            }
            low = std::min(low, s);
        }
        rep.value += low;
    }
    rep.bound = static_cast<double>(binomial(k - d, k - r));
    rep.pass = rep.value >= rep.bound - kWitnessSlack;
    return rep;
}

WitnessReport pairwise_witness(const TransitionMatrix &a, int d) {
    const auto k = static_cast<int>(a.k());
    if (k < 2 || d < 1) {
        throw Error(ErrorCode::BadRange, "need k >= 2 and d >= 1");
    }
    WitnessReport rep;
    rep.relation = Relation::AtMost;
    rep.r = 2;
    rep.d = d;
    rep.k = k;
    rep.n = static_cast<int>(a.l());
    for (size_t i = 0; i < a.k(); ++i) {
        for (size_t i2 = i + 1; i2 < a.k(); ++i2) {
            double high = 0.0;
            for (size_t j = 0; j < a.l(); ++j) {
                high = std::max(high, a(i, j) + a(i2, j));
            }
            rep.value += high;
        }
    }
    rep.bound = static_cast<double>(binomial(k, 2)) - static_cast<double>(binomial(std::max(k - d, 0), 2));
    rep.pass = rep.value <= rep.bound + kWitnessSlack;
    return rep;
}

int noisy_signalling_dimension(int n, const Rational &delta) {
    if (delta < Rational(0) || delta > Rational(1)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    if (n < 1) {
        throw Error(ErrorCode::BadRange, "need n >= 1");
    }
    return static_cast<int>(ceil((Rational(1) - delta) * Rational(n) + delta));
}

int noisy_signalling_dimension(int n, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    if (n < 1) {
        throw Error(ErrorCode::BadRange, "need n >= 1");
    }
    double x = (1.0 - delta) * n + delta;
    double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-12) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(x));
}

std::optional<int> permutohedron_simulable_by_d(std::span<const double> mu, int d) {
    const auto n = static_cast<int>(mu.size());
    if (d < 1 || d > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= d <= n");
    }
    for (size_t i = 1; i < mu.size(); ++i) {
        if (mu[i] < mu[i - 1] - kWitnessSlack) {
            throw Error(ErrorCode::BadRange, "mu must be ascending");
        }
    }
    std::vector<double> prefix(mu.size() + 1, 0.0);
    for (size_t i = 0; i < mu.size(); ++i) {
        prefix[i + 1] = prefix[i] + mu[i];
    }
    const auto total = static_cast<double>(binomial(n, d));
    for (int r = n; r >= d; --r) {
        if (prefix[static_cast<size_t>(r)] < static_cast<double>(binomial(r, d)) / total - kWitnessSlack) {
            return r;
        }
    }
    return std::nullopt;
}

std::optional<int> delta_simulable_by_d(int n, const Rational &delta, int d) {
    if (delta < Rational(0) || delta > Rational(1)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    if (d < 1 || d > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= d <= n");
    }
    // Ascending extremal spectrum: delta/n repeated n - 1 times, then the rest;
    // the full prefix is 1 and always passes.
    const auto total = static_cast<std::int64_t>(binomial(n, d));
    for (int r = n - 1; r >= d; --r) {
        Rational prefix = Rational(r) * delta / Rational(n);
        Rational bound(static_cast<std::int64_t>(binomial(r, d)), total);
        if (prefix < bound) {
            return r;
        }
    }
    return std::nullopt;
}

ReplacerBounds replacer_bounds(int m, const Rational &delta, std::span<const double> mu, int n) {
    if (m < 1 || m > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= m <= n");
    }
    if (delta < Rational(0) || delta > Rational(1)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    if (mu.size() != static_cast<size_t>(n)) {
        throw Error(ErrorCode::LengthMismatch, "spectrum length must equal n");
    }
    require_prob_vector(mu);
    ReplacerBounds out;
    out.lower = static_cast<int>(ceil((Rational(1) - delta) * Rational(m) + delta));
    out.upper = std::min<int>(m, static_cast<int>(ceil((Rational(1) - delta) * Rational(m) + Rational(1))));
    if (out.lower == out.upper) {
        out.exact = out.lower;
        return out;
    }
    if (m == n) {
        std::vector<double> sorted(mu.begin(), mu.end());
        std::sort(sorted.begin(), sorted.end());
        const int d = out.lower;
        const auto total = static_cast<double>(binomial(n, d));
        const double dl = delta.to_double();
        double prefix = 0.0;
        bool ok = true;
        for (int r = 1; r < n; ++r) {
            prefix += sorted[static_cast<size_t>(r - 1)];
            if (r >= d && dl * prefix < static_cast<double>(binomial(r, d)) / total - kWitnessSlack) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.exact = d;
        }
    }
    return out;
}

Asymmetry minkowski_asymmetry_with_center(const Polytope &p) {
    validate_polytope(p);
    const size_t dim = p.dimension();
    if (affine_rank(p.vertices) < dim) {
        throw Error(ErrorCode::NotFullDimensional, "vertices do not span the ambient space");
    }
    // Variables: u (free, dim entries) then t >= 0; maximize t.
    lp::LinearProgram prog;
    prog.variables = dim + 1;
    prog.free.assign(dim + 1, true);
    prog.free[dim] = false;
    for (const auto &f : p.facets) {
        for (const auto &v : p.vertices) {
            std::vector<double> coeffs(f.normal.begin(), f.normal.end());
            coeffs.push_back(-dot(f.normal, v));
            prog.add(std::move(coeffs), lp::Relation::LessEqual, f.offset);
        }
    }
    std::vector<double> obj(dim + 1, 0.0);
    obj[dim] = 1.0;
    prog.objective = lp::Objective{obj, true};
    auto result = lp::solve(prog);
    if (std::holds_alternative<lp::Infeasible>(result)) {
        throw Error(ErrorCode::LpInfeasible, "asymmetry program is infeasible");
    }
    if (std::holds_alternative<lp::Unbounded>(result)) {
        throw Error(ErrorCode::NotFullDimensional, "asymmetry program is unbounded");
    }
    const auto &opt = std::get<lp::Optimal>(result);
    double t = opt.value;
    if (!(t > 1e-12)) {
        throw Error(ErrorCode::NotFullDimensional, "polytope has empty interior");
    }
    // u = (1 + t) c.
    Asymmetry out;
    out.value = 1.0 / t;
    for (size_t c = 0; c < dim; ++c) {
        out.center.push_back(opt.x[c] / (1.0 + t));
    }
    return out;
}

double minkowski_asymmetry(const Polytope &p) { return minkowski_asymmetry_with_center(p).value; }

bool asymmetry_attained(const Polytope &p, const Asymmetry &a, double tol) {
    validate_polytope(p);
    if (a.center.size() != p.dimension() || !(a.value >= 1.0 - tol)) {
        return false;
    }
    for (const auto &f : p.facets) {
        const double ac = dot(f.normal, a.center);
        for (const auto &v : p.vertices) {
            double image = ac - (dot(f.normal, v) - ac) / a.value;
            if (image > f.offset + tol) {
                return false;
            }
        }
    }
    return true;
}

double mutual_information(const TransitionMatrix &a, std::span<const double> q) {
    if (q.size() != a.l()) {
        throw Error(ErrorCode::DimensionMismatch, "q must have one entry per input column");
    }
    require_prob_vector(q);
    std::vector<double> joint;
    std::vector<double> out_marginal(a.k(), 0.0);
    joint.reserve(a.k() * a.l());
    for (size_t i = 0; i < a.k(); ++i) {
        for (size_t j = 0; j < a.l(); ++j) {
            double pij = q[j] * a(i, j);
            joint.push_back(pij);
            out_marginal[i] += pij;
        }
    }
    return entropy_bits(q) + entropy_bits(out_marginal) - entropy_bits(joint);
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    auto values = hermitian_eigenvalues(rho).values;
    for (auto &v : values) {
        v = std::max(v, 0.0);
    }
    return entropy_bits(values);
}

double holevo_chi(std::span<const DensityMatrix> states, std::span<const double> q) {
    if (states.empty()) {
        throw Error(ErrorCode::EmptyInput, "no states supplied");
    }
    if (q.size() != states.size()) {
        throw Error(ErrorCode::DimensionMismatch, "q must have one entry per state");
    }
    require_prob_vector(q);
    const size_t n = states.front().matrix.dim();
    ComplexMatrix avg(n);
    double conditional = 0.0;
    for (size_t j = 0; j < states.size(); ++j) {
        if (states[j].matrix.dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, "states have differing dimensions");
        }
        avg += states[j].matrix * Complex(q[j], 0.0);
        conditional += q[j] * von_neumann_entropy(states[j].matrix);
    }
    return von_neumann_entropy(avg) - conditional;
}

}  // namespace chansim
