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

#include "chansim/channels.hpp"

#include <cmath>
#include <numeric>

#include "chansim/error.hpp"
#include "chansim/majorize.hpp"

namespace chansim {

Matrix ClassicalProtocol::decoder_matrix() const {
    Matrix e(k, decoder.size());
    for (size_t m = 0; m < decoder.size(); ++m) {
        e(static_cast<size_t>(decoder[m]), m) = 1.0;
    }
    return e;
}

std::string describe(const NoiseSpec &spec) {
    struct Visitor {
        std::string operator()(const noise::Noiseless &) const { return "noiseless"; }
        std::string operator()(const noise::Delta &d) const { return "delta:" + std::to_string(d.delta); }
        std::string operator()(const noise::Permutohedron &p) const {
            return "permutohedron of " + std::to_string(p.base.size()) + "-vector";
        }
        std::string operator()(const noise::PerColumn &p) const {
            return "per-column permutohedra (" + std::to_string(p.columns.size()) + ")";
        }
    };
    return std::visit(Visitor{}, spec);
}

std::vector<std::vector<double>> noisy_classical_extremals(int n, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    if (n < 1) {
        throw Error(ErrorCode::BadRange, "need at least one state");
    }
    const double leak = delta / n;
    const double keep = 1.0 - (n - 1) * delta / n;
    std::vector<std::vector<double>> out(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), leak));
    for (size_t t = 0; t < out.size(); ++t) {
        out[t][t] = keep;
    }
    return out;
}

namespace {

bool is_prob_vector(std::span<const double> x, double tol) {
    double total = 0.0;
    for (double v : x) {
        if (!std::isfinite(v) || v < -tol) {
            return false;
        }
        total += v;
    }
    return std::abs(total - 1.0) <= tol;
}

}  // namespace

bool satisfies_noise(std::span<const double> x, const NoiseSpec &spec, size_t column, double tol) {
    if (!is_prob_vector(x, tol)) {
        return false;
    }
    if (std::holds_alternative<noise::Noiseless>(spec)) {
        return true;
    }
    if (const auto *d = std::get_if<noise::Delta>(&spec)) {
        const double floor = d->delta / static_cast<double>(x.size());
        for (double v : x) {
            if (v < floor - tol) {
                return false;
            }
        }
        return true;
    }
    const noise::Permutohedron *p = std::get_if<noise::Permutohedron>(&spec);
    if (const auto *pc = std::get_if<noise::PerColumn>(&spec)) {
        if (column >= pc->columns.size()) {
            throw Error(ErrorCode::LengthMismatch, "no noise set for column " + std::to_string(column));
        }
        p = &pc->columns[column];
    }
    if (p->base.size() != x.size()) {
        throw Error(ErrorCode::LengthMismatch, "noise base length differs from state length");
    }
    return majorized_by_permutohedron(x, p->base, tol);
}

void validate_protocol(const ClassicalProtocol &p, double tol) {
    if (p.decoder.empty() || p.k == 0) {
        throw Error(ErrorCode::InvalidInput, "protocol needs at least one state and one output");
    }
    for (int out : p.decoder) {
        if (out < 0 || static_cast<size_t>(out) >= p.k) {
            throw Error(ErrorCode::InvalidInput, "decoder output out of range");
        }
    }
    if (p.states.rows() != p.decoder.size()) {
        throw Error(ErrorCode::DimensionMismatch, "state matrix rows must equal decoder length");
    }
    for (size_t j = 0; j < p.states.cols(); ++j) {
        if (!is_prob_vector(p.states.column(j), tol)) {
            throw Error(ErrorCode::NotStochastic, "protocol state column " + std::to_string(j));
        }
    }
}

TransitionMatrix protocol_matrix(const ClassicalProtocol &p) {
    validate_protocol(p);
    Matrix a(p.k, p.states.cols());
    for (size_t m = 0; m < p.decoder.size(); ++m) {
        auto i = static_cast<size_t>(p.decoder[m]);
        for (size_t j = 0; j < p.states.cols(); ++j) {
            a(i, j) += p.states(m, j);
        }
    }
    return TransitionMatrix::from(std::move(a));
}

TransitionMatrix mixture_matrix(const ClassicalMixture &m) {
    if (m.terms.empty()) {
        throw Error(ErrorCode::WeightSumNotOne, "mixture has no terms");
    }
    double total = 0.0;
    for (const auto &t : m.terms) {
        if (!(t.weight >= 0.0)) {
            throw Error(ErrorCode::WeightSumNotOne, "negative mixture weight");
        }
        total += t.weight;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::WeightSumNotOne, "weights sum to " + std::to_string(total));
    }
    Matrix acc;
    for (const auto &t : m.terms) {
        Matrix part = protocol_matrix(t.protocol).matrix().scaled(t.weight);
        if (acc.rows() == 0) {
            acc = Matrix(part.rows(), part.cols());
        }
        acc += part;
    }
    return TransitionMatrix::from(std::move(acc));
}

double lp_norm(std::span<const double> v, double p) {
    double s = 0.0;
    double scale = 0.0;
    for (double x : v) {
        scale = std::max(scale, std::abs(x));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    for (double x : v) {
        s += std::pow(std::abs(x) / scale, p);
    }
    return scale * std::pow(s, 1.0 / p);
}

void validate_ball_model(const BallModel &model, double tol) {
    if (model.norm_index < 2 || model.norm_index % 2 != 0) {
        throw Error(ErrorCode::OddNormIndex, "norm index must be a positive even integer");
    }
    if (model.effects.empty()) {
        throw Error(ErrorCode::NotPartitionOfUnity, "no effects");
    }
    const size_t d = model.dimension();
    const double n = model.norm_index;
    const double state_exponent = n / (n - 1.0);
    double c_total = 0.0;
    std::vector<double> v_total(d, 0.0);
    for (size_t i = 0; i < model.effects.size(); ++i) {
        const auto &e = model.effects[i];
        if (e.v.size() != d) {
            throw Error(ErrorCode::DimensionMismatch, "effect dimensions differ");
        }
        if (lp_norm(e.v, n) > e.c + tol) {
            throw Error(ErrorCode::InvalidEffect, "effect " + std::to_string(i) + " is negative somewhere on the ball");
        }
        c_total += e.c;
        for (size_t t = 0; t < d; ++t) {
            v_total[t] += e.v[t];
        }
    }
    if (std::abs(c_total - 1.0) > tol || lp_norm(v_total, 1.0) > tol) {
        throw Error(ErrorCode::NotPartitionOfUnity, "effects do not sum to the unit effect");
    }
    for (size_t j = 0; j < model.states.size(); ++j) {
        if (model.states[j].x.size() != d) {
            throw Error(ErrorCode::DimensionMismatch, "state dimension differs from effects");
        }
        if (lp_norm(model.states[j].x, state_exponent) > 1.0 + tol) {
            throw Error(ErrorCode::InvalidState, "state " + std::to_string(j) + " lies outside the unit ball");
        }
    }
}

double bracket(std::span<const BallEffect> effects) {
    if (effects.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "bracket of no effects");
    }
    const size_t d = effects.front().v.size();
    double c_prod = 1.0;
    for (const auto &e : effects) {
        if (e.v.size() != d) {
            throw Error(ErrorCode::DimensionMismatch, "effect dimensions differ");
        }
        c_prod *= e.c;
    }
    double v_sum = 0.0;
    for (size_t t = 0; t < d; ++t) {
        double prod = 1.0;
        for (const auto &e : effects) {
            prod *= e.v[t];
        }
        v_sum += prod;
    }
    return c_prod - v_sum;
}

TransitionMatrix ball_born_matrix(const BallModel &model, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw Error(ErrorCode::BadDelta, "delta must lie in [0, 1]");
    }
    validate_ball_model(model);
    Matrix a(model.effects.size(), model.states.size());
    for (size_t i = 0; i < model.effects.size(); ++i) {
        const auto &e = model.effects[i];
        for (size_t j = 0; j < model.states.size(); ++j) {
            double dot = std::inner_product(e.v.begin(), e.v.end(), model.states[j].x.begin(), 0.0);
            a(i, j) = e.c + (1.0 - delta) * dot;
        }
    }
    return TransitionMatrix::from(std::move(a), 1e-8);
}

}  // namespace chansim
