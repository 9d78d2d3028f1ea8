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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "chansim/channels.hpp"
#include "chansim/matrix.hpp"
#include "chansim/random.hpp"

namespace chansim::fixtures {

/// Effects (1 +- v . x) / 2 on the Euclidean disk.
inline BallModel disk_bit(double angle) {
    BallModel m;
    m.norm_index = 2;
    std::vector<double> v{0.5 * std::cos(angle), 0.5 * std::sin(angle)};
    m.effects = {{0.5, v}, {0.5, {-v[0], -v[1]}}};
    m.states = {{{std::cos(angle), std::sin(angle)}}, {{-std::cos(angle), -std::sin(angle)}}};
    return m;
}

/// Random partition of unity with k effects in dimension dim for norm
/// index n: random directions scaled so the effects stay valid, the last
/// effect absorbs the remainder.
inline BallModel random_ball(int n, size_t dim, size_t k, size_t l, Rng &rng) {
    std::normal_distribution<double> g;
    BallModel m;
    m.norm_index = n;
    std::vector<double> sum_v(dim, 0.0);
    double budget = 1.0;
    for (size_t i = 0; i + 1 < k; ++i) {
        double c = budget / static_cast<double>(k - i) * 0.9;
        std::vector<double> v(dim);
        for (auto &x : v) {
            x = g(rng);
        }
        double norm = lp_norm(v, n);
        for (auto &x : v) {
            x *= 0.3 * c / norm;
        }
        for (size_t t = 0; t < dim; ++t) {
            sum_v[t] += v[t];
        }
        m.effects.push_back({c, v});
        budget -= c;
    }
    std::vector<double> last(dim);
    for (size_t t = 0; t < dim; ++t) {
        last[t] = -sum_v[t];
    }
    m.effects.push_back({budget, last});
    const double q = static_cast<double>(n) / static_cast<double>(n - 1);
    for (size_t j = 0; j < l; ++j) {
        std::vector<double> x(dim);
        for (auto &e : x) {
            e = g(rng);
        }
        double norm = lp_norm(x, q);
        for (auto &e : x) {
            e /= norm;
        }
        m.states.push_back({x});
    }
    return m;
}


/// The four-outcome, six-input octahedron matrix: each column is uniform on a
/// pair of outputs, one column for every pair.
inline TransitionMatrix octahedron_matrix() {
    return TransitionMatrix::from(Matrix::from_rows({{0.5, 0, 0.5, 0, 0.5, 0},
                                                     {0.5, 0, 0, 0.5, 0, 0.5},
                                                     {0, 0.5, 0.5, 0, 0, 0.5},
                                                     {0, 0.5, 0, 0.5, 0.5, 0}}));
}

/// Random column-stochastic k x l matrix.
inline TransitionMatrix random_transition(size_t k, size_t l, Rng &rng) {
    Matrix m(k, l);
    for (size_t j = 0; j < l; ++j) {
        auto col = sample::prob_vector(k, rng);
        for (size_t i = 0; i < k; ++i) {
            m(i, j) = col[i];
        }
    }
    return TransitionMatrix::from(m);
}

/// Column stochasticity and weight normalization of a mixture, plus the
/// declared noise and state-count bounds; returns the first failure.
inline std::string mixture_defect(const ClassicalMixture &m, size_t max_states) {
    double total = 0.0;
    for (const auto &t : m.terms) {
        if (t.weight < 0) {
            return "negative weight";
        }
        total += t.weight;
        if (t.protocol.n() > max_states) {
            return "too many states";
        }
        for (size_t j = 0; j < t.protocol.states.cols(); ++j) {
            auto col = t.protocol.states.column(j);
            double s = 0.0;
            for (double x : col) {
                if (x < -1e-12) {
                    return "negative state entry";
                }
                s += x;
            }
            if (std::abs(s - 1.0) > 1e-9) {
                return "state column not stochastic";
            }
            if (!satisfies_noise(col, m.noise, j, 1e-9)) {
                return "noise set violated";
            }
        }
    }
    if (std::abs(total - 1.0) > 1e-9) {
        return "weights do not sum to one";
    }
    return {};
}

}  // namespace chansim::fixtures
