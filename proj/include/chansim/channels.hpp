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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chansim/matrix.hpp"

namespace chansim {

/// Decoder [n] -> [k] (slot m reports output decoder[m]) applied to an
/// n x l column-stochastic matrix of classical input states.
struct ClassicalProtocol {
    size_t k = 0;
    std::vector<int> decoder;
    Matrix states;

    size_t n() const { return decoder.size(); }
    /// 0-1 k x n rendering of the decoder.
    Matrix decoder_matrix() const;
};

namespace noise {

struct Noiseless {};

/// Convex hull of the extremal delta-noisy states: every entry >= delta / n.
struct Delta {
    double delta = 0.0;
};

/// Convex hull of all coordinate permutations of base.
struct Permutohedron {
    std::vector<double> base;
};

/// Column j must lie in columns[j].
struct PerColumn {
    std::vector<Permutohedron> columns;
};

}  // namespace noise

using NoiseSpec = std::variant<noise::Noiseless, noise::Delta, noise::Permutohedron, noise::PerColumn>;

std::string describe(const NoiseSpec &spec);

struct MixtureTerm {
    double weight = 0.0;
    ClassicalProtocol protocol;
};

struct ClassicalMixture {
    std::vector<MixtureTerm> terms;
    /// Upper bound on every protocol's state count.
    size_t states = 0;
    NoiseSpec noise;
};

/// Vector t has 1 - (n - 1) delta / n at position t and delta / n elsewhere.
/// Throws BadDelta.
std::vector<std::vector<double>> noisy_classical_extremals(int n, double delta);

/// Membership of a probability vector x (input column index `column`) in the set
/// described by spec. Throws LengthMismatch.
bool satisfies_noise(std::span<const double> x, const NoiseSpec &spec, size_t column = 0, double tol = 1e-9);

/// Throws InvalidInput / NotStochastic when the decoder or states are
/// malformed.
void validate_protocol(const ClassicalProtocol &p, double tol = 1e-9);

TransitionMatrix protocol_matrix(const ClassicalProtocol &p);

/// Weighted sum of the protocol matrices. Throws WeightSumNotOne.
TransitionMatrix mixture_matrix(const ClassicalMixture &m);

/// Affine functional e(x) = c + v . x on the unit ball of the n/(n-1)-norm.
struct BallEffect {
    double c = 0.0;
    std::vector<double> v;
};

struct BallState {
    std::vector<double> x;
};

/// Ball-model channel: effects form a partition of unity, states lie in the
/// unit ball of the norm_index/(norm_index - 1)-norm, norm_index even.
struct BallModel {
    int norm_index = 2;
    std::vector<BallEffect> effects;
    std::vector<BallState> states;

    size_t dimension() const { return effects.empty() ? 0 : effects.front().v.size(); }
};

double lp_norm(std::span<const double> v, double p);

/// Throws OddNormIndex, DimensionMismatch, InvalidEffect, InvalidState or
/// NotPartitionOfUnity.
void validate_ball_model(const BallModel &model, double tol = 1e-9);

/// c_1 ... c_n - sum_t prod_i v_i[t]. Throws DimensionMismatch.
double bracket(std::span<const BallEffect> effects);

/// Entry (i, j) = c_i + (1 - delta) v_i . x_j. Validates the model first.
TransitionMatrix ball_born_matrix(const BallModel &model, double delta);

}  // namespace chansim
