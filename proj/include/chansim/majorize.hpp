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
#include <vector>

#include "chansim/matrix.hpp"

namespace chansim {

struct PermutationTerm {
    double weight = 0.0;
    /// Applied to a vector v this yields w with w[i] = v[perm[i]].
    std::vector<int> perm;
};

/// Convex combination of permutations; weights sum to 1.
struct PermutationMixture {
    std::vector<PermutationTerm> terms;

    /// sum_t weight_t * (v permuted by perm_t).
    std::vector<double> apply(std::span<const double> v) const;
    /// sum_t weight_t * P_t with (P_t)(i, perm_t[i]) = 1.
    Matrix as_matrix(size_t n) const;
};

/// Throws Error(NotStochastic) unless entries are >= -tol and sum to 1
/// within tol.
void require_prob_vector(std::span<const double> v, double tol = 1e-9);

/// True iff x lies in the permutohedron of mu: the r smallest entries of x sum
/// to at least the r smallest of mu (minus tol) for every r, and the totals
/// agree within tol.
bool majorized_by_permutohedron(std::span<const double> x, std::span<const double> mu, double tol = 1e-9);

/// Writes mu as a convex combination of permutations of nu using a chain of
/// T-transforms followed by Birkhoff extraction. Throws NotMajorized.
PermutationMixture hlp_decompose(std::span<const double> mu, std::span<const double> nu);

/// Birkhoff-von Neumann decomposition by repeated perfect matchings on the
/// positive support. Throws NotDoublyStochastic.
PermutationMixture birkhoff(const Matrix &doubly_stochastic);

/// Distribution of max S for S a uniform d-subset of [n]:
/// nu_r = (C(r, d) - C(r - 1, d)) / C(n, d), r = 1..n. Throws BadRange.
std::vector<double> max_subset_distribution(int n, int d);

}  // namespace chansim
