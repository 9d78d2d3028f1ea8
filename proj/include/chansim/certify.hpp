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
#include <string>
#include <vector>

#include "chansim/combinatorics.hpp"
#include "chansim/linalg.hpp"
#include "chansim/matrix.hpp"

namespace chansim {

inline constexpr double kWitnessSlack = 1e-9;

enum class Relation { AtLeast, AtMost };

/// value compared against bound; pass means the inequality holds within
/// kWitnessSlack.
struct WitnessReport {
    double value = 0.0;
    double bound = 0.0;
    Relation relation = Relation::AtLeast;
    int r = 0;
    int d = 0;
    int k = 0;
    int n = 0;
    bool pass = true;
};

/// Facet a . x <= b.
struct Facet {
    std::vector<double> normal;
    double offset = 0.0;
};

struct Polytope {
    std::vector<std::vector<double>> vertices;
    std::vector<Facet> facets;

    size_t dimension() const { return vertices.empty() ? 0 : vertices.front().size(); }

    static Polytope octahedron();
    /// Convex hull of 0, e_1, ..., e_d.
    static Polytope simplex(int d);
    /// [-1, 1]^d.
    static Polytope cube(int d);
};

/// Throws InvalidPolytope on ragged data or a vertex outside some facet.
void validate_polytope(const Polytope &p, double tol = 1e-9);

/// Largest sum of row maxima over the given matrices. Throws EmptyInput.
double storability(std::span<const TransitionMatrix> matrices);
double storability(const TransitionMatrix &a);

/// Sum over r-subsets S of rows of min_j sum_{i in S} a_ij, against
/// C(k - d, k - r).
WitnessReport subset_witness(const TransitionMatrix &a, int r, int d);

/// Sum over row pairs of max_j (a_ij + a_i'j), against C(k, 2) - C(k - d, 2).
WitnessReport pairwise_witness(const TransitionMatrix &a, int d);

/// ceil((1 - delta) n + delta). Throws BadDelta outside [0, 1].
int noisy_signalling_dimension(int n, const Rational &delta);
/// Float form; values within 1e-12 of an integer are taken as that integer.
int noisy_signalling_dimension(int n, double delta);

/// Largest r in [d, n] with mu_1 + ... + mu_r < C(r, d) / C(n, d) - 1e-9,
/// or nullopt when every prefix passes. Throws BadRange unless mu is
/// ascending and 1 <= d <= n.
std::optional<int> permutohedron_simulable_by_d(std::span<const double> mu, int d);

/// Same test on the delta-noisy extremal spectrum in exact arithmetic.
std::optional<int> delta_simulable_by_d(int n, const Rational &delta, int d);

struct ReplacerBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

/// Signalling-dimension bounds for the partial replacer channel from m-level
/// inputs to n-level outputs with replacement state of spectrum mu.
ReplacerBounds replacer_bounds(int m, const Rational &delta, std::span<const double> mu, int n);

struct Asymmetry {
    double value = 1.0;
    /// Centre c attaining c - (P - c) / value inside P.
    std::vector<double> center;
};

/// Minkowski asymmetry of a full-dimensional polytope.
Asymmetry minkowski_asymmetry_with_center(const Polytope &p);
double minkowski_asymmetry(const Polytope &p);

/// True when c - (v - c) / m lies in P for every vertex v.
bool asymmetry_attained(const Polytope &p, const Asymmetry &a, double tol = 1e-9);

/// Mutual information in bits of the joint q_j a_ij.
double mutual_information(const TransitionMatrix &a, std::span<const double> q);

/// S(sum q_j rho_j) - sum q_j S(rho_j) in bits.
double holevo_chi(std::span<const DensityMatrix> states, std::span<const double> q);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix &rho);

}  // namespace chansim
