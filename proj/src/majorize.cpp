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

#include "chansim/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "chansim/combinatorics.hpp"
#include "chansim/error.hpp"

namespace chansim {

std::vector<double> PermutationMixture::apply(std::span<const double> v) const {
    std::vector<double> out(v.size(), 0.0);
    for (const auto &term : terms) {
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] += term.weight * v[static_cast<size_t>(term.perm[i])];
        }
    }
    return out;
}

Matrix PermutationMixture::as_matrix(size_t n) const {
    Matrix out(n, n);
    for (const auto &term : terms) {
        for (size_t i = 0; i < n; ++i) {
            out(i, static_cast<size_t>(term.perm[i])) += term.weight;
        }
    }
    return out;
}

void require_prob_vector(std::span<const double> v, double tol) {
    double total = 0.0;
    for (double x : v) {
        if (!std::isfinite(x) || x < -tol) {
            throw Error(ErrorCode::NotStochastic, "negative or non-finite probability");
        }
        total += x;
    }
    if (v.empty() || std::abs(total - 1.0) > tol) {
        throw Error(ErrorCode::NotStochastic, "probabilities sum to " + std::to_string(total));
    }
}

bool majorized_by_permutohedron(std::span<const double> x, std::span<const double> mu, double tol) {
    if (x.size() != mu.size()) {
        throw Error(ErrorCode::LengthMismatch, "vectors differ in length");
    }
    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ms(mu.begin(), mu.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ms.begin(), ms.end());
    double px = 0.0;
    double pm = 0.0;
    for (size_t r = 0; r < xs.size(); ++r) {
        px += xs[r];
        pm += ms[r];
        if (px < pm - tol) {
            return false;
        }
    }
    return std::abs(px - pm) <= tol;
}

namespace {

constexpr double kSupportEps = 1e-10;

/// Kuhn's augmenting-path matching on entries > eps; match[row] = column.
bool perfect_matching(const Matrix &m, std::vector<int> &match) {
    const size_t n = m.rows();
    std::vector<int> owner(n, -1);
    std::vector<char> visited(n);
    auto augment = [&](auto &&self, size_t row) -> bool {
        for (size_t c = 0; c < n; ++c) {
            if (m(row, c) > kSupportEps && !visited[c]) {
                visited[c] = 1;
                if (owner[c] < 0 || self(self, static_cast<size_t>(owner[c]))) {
                    owner[c] = static_cast<int>(row);
                    return true;
                }
            }
        }
        return false;
    };
    for (size_t r = 0; r < n; ++r) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, r)) {
            return false;
        }
    }
    match.assign(n, -1);
    for (size_t c = 0; c < n; ++c) {
        match[static_cast<size_t>(owner[c])] = static_cast<int>(c);
    }
    return true;
}

void merge_duplicates(PermutationMixture &mix) {
    std::map<std::vector<int>, double> merged;
    std::vector<std::vector<int>> order;
    for (auto &t : mix.terms) {
        auto [it, inserted] = merged.emplace(t.perm, 0.0);
        if (inserted) {
            order.push_back(t.perm);
        }
        it->second += t.weight;
    }
    mix.terms.clear();
    for (auto &p : order) {
        mix.terms.push_back({merged[p], p});
    }
}

}  // namespace

PermutationMixture birkhoff(const Matrix &doubly_stochastic) {
    const size_t n = doubly_stochastic.rows();
    if (n == 0 || doubly_stochastic.cols() != n) {
        throw Error(ErrorCode::NotDoublyStochastic, "matrix must be square and nonempty");
    }
    for (size_t i = 0; i < n; ++i) {
        double row = 0.0;
        double col = 0.0;
        for (size_t j = 0; j < n; ++j) {
            if (!(doubly_stochastic(i, j) >= -1e-10)) {
                throw Error(ErrorCode::NotDoublyStochastic, "negative entry");
            }
            row += doubly_stochastic(i, j);
            col += doubly_stochastic(j, i);
        }
        if (std::abs(row - 1.0) > 1e-8 || std::abs(col - 1.0) > 1e-8) {
            throw Error(ErrorCode::NotDoublyStochastic, "line " + std::to_string(i) + " does not sum to 1");
        }
    }

    Matrix rest = doubly_stochastic;
    PermutationMixture mix;
    std::vector<int> match;
    const size_t max_terms = (n - 1) * (n - 1) + 1;
    while (mix.terms.size() < max_terms && perfect_matching(rest, match)) {
        double w = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            w = std::min(w, rest(i, static_cast<size_t>(match[i])));
        }
        for (size_t i = 0; i < n; ++i) {
            double &e = rest(i, static_cast<size_t>(match[i]));
            e -= w;
            if (e <= kSupportEps) {
                e = 0.0;
            }
        }
        mix.terms.push_back({w, match});
    }
    double total = 0.0;
    for (const auto &t : mix.terms) {
        total += t.weight;
    }
    if (mix.terms.empty() || total <= 0.0) {
        throw Error(ErrorCode::NotDoublyStochastic, "no perfect matching on the support");
    }
    // What is left is below the support threshold; fold it into the weights.
    for (auto &t : mix.terms) {
        t.weight /= total;
    }
    return mix;
}

PermutationMixture hlp_decompose(std::span<const double> mu, std::span<const double> nu) {
    const size_t n = mu.size();
    if (nu.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "vectors differ in length");
    }
    if (n == 0 || !majorized_by_permutohedron(mu, nu, 1e-9)) {
        throw Error(ErrorCode::NotMajorized, "target is outside the permutohedron");
    }
    // Work with both vectors sorted in decreasing order, ties by index.
    std::vector<int> mu_order(n);
    std::vector<int> nu_order(n);
    std::iota(mu_order.begin(), mu_order.end(), 0);
    std::iota(nu_order.begin(), nu_order.end(), 0);
    std::stable_sort(mu_order.begin(), mu_order.end(),
                     [&](int a, int b) { return mu[static_cast<size_t>(a)] > mu[static_cast<size_t>(b)]; });
    std::stable_sort(nu_order.begin(), nu_order.end(),
                     [&](int a, int b) { return nu[static_cast<size_t>(a)] > nu[static_cast<size_t>(b)]; });
    std::vector<double> target(n);
    std::vector<double> x(n);
    for (size_t a = 0; a < n; ++a) {
        target[a] = mu[static_cast<size_t>(mu_order[a])];
        x[a] = nu[static_cast<size_t>(nu_order[a])];
    }

    // Invariant: x = D * sorted(nu) with D doubly stochastic, target majorized
    // by x. Each T-transform moves mass from the last coordinate in excess to
    // the first later coordinate in deficit, fixing at least one of them.
    constexpr double eps = 1e-13;
    Matrix d = Matrix::identity(n);
    for (size_t step = 0; step < n * n; ++step) {
        int j = -1;
        for (size_t a = 0; a < n; ++a) {
            if (x[a] - target[a] > eps) {
                j = static_cast<int>(a);
            }
        }
        if (j < 0) {
            break;
        }
        int k = -1;
        for (size_t a = static_cast<size_t>(j) + 1; a < n; ++a) {
            if (target[a] - x[a] > eps) {
                k = static_cast<int>(a);
                break;
            }
        }
        if (k < 0) {
            break;
        }
        auto ju = static_cast<size_t>(j);
        auto ku = static_cast<size_t>(k);
        double shift = std::min(x[ju] - target[ju], target[ku] - x[ku]);
        double gap = x[ju] - x[ku];
        if (gap <= 0.0) {
            break;
        }
        double s = shift / gap;
        // x' = T x with T = (1 - s) I + s * swap(j, k); D' = T D.
        for (size_t c = 0; c < n; ++c) {
            double rj = d(ju, c);
            double rk = d(ku, c);
            d(ju, c) = (1.0 - s) * rj + s * rk;
            d(ku, c) = s * rj + (1.0 - s) * rk;
        }
        double xj = x[ju];
        double xk = x[ku];
        x[ju] = (1.0 - s) * xj + s * xk;
        x[ku] = s * xj + (1.0 - s) * xk;
    }

    PermutationMixture sorted_mix = birkhoff(d);
    // target[a] = sum_w x0[pi(a)]  ==>  mu[mu_order[a]] = sum_w nu[nu_order[pi(a)]].
    PermutationMixture out;
    for (const auto &term : sorted_mix.terms) {
        PermutationTerm t;
        t.weight = term.weight;
        t.perm.assign(n, 0);
        for (size_t a = 0; a < n; ++a) {
            t.perm[static_cast<size_t>(mu_order[a])] = nu_order[static_cast<size_t>(term.perm[a])];
        }
        out.terms.push_back(std::move(t));
    }
    merge_duplicates(out);
    return out;
}

std::vector<double> max_subset_distribution(int n, int d) {
    if (d < 1 || d > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= d <= n");
    }
    const auto total = static_cast<double>(binomial(n, d));
    std::vector<double> nu(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) {
        nu[static_cast<size_t>(r - 1)] = static_cast<double>(binomial(r, d) - binomial(r - 1, d)) / total;
    }
    return nu;
}

}  // namespace chansim
