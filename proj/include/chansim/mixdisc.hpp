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

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "chansim/linalg.hpp"

namespace chansim {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Probability weights over index tuples I in [k]^n. Zero weights are not
/// stored.
struct OutcomeDistribution {
    int n = 0;
    int k = 0;
    std::map<std::vector<int>, double> weights;

    double mass() const;
    double weight(const std::vector<int> &tuple) const;
};

/// Weights grouped by multiset: every ordering of multisets[t] carries
/// weight per_tuple[t]. Multisets are sorted and listed lexicographically.
struct MultisetDistribution {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> multisets;
    std::vector<double> per_tuple;
    std::vector<std::uint64_t> orderings;

    /// Sum over tuples.
    double mass() const;
    OutcomeDistribution expand() const;
};

/// D(E_1, ..., E_n) by the column-interleaving formula: average over all
/// permutations pi of det[col_1(E_pi(1)), ..., col_n(E_pi(n))].
Complex mixed_discriminant_complex(std::span<const ComplexMatrix> matrices);

/// Real part of the above; throws NonRealResult when |Im| > 1e-8.
double mixed_discriminant(std::span<const ComplexMatrix> matrices);

/// D(F, ..., F, 1 - F, ..., 1 - F) with n - q copies of F and q of 1 - F.
double symmetric_mixed(const ComplexMatrix &f, int q, int n);

/// p_I = D(E_{i_1}, ..., E_{i_n}), one determinant sweep per multiset,
/// parallel over multisets. Negative weights within 1e-9 of zero are clamped,
/// larger ones throw NegativeWeight; total mass drift up to 1e-7 is
/// renormalized away, larger drift throws MassDrift.
MultisetDistribution multiset_distribution(const Povm &povm, std::uint64_t cap = kDefaultEnumerationCap);

/// Single-threaded reference for multiset_distribution.
MultisetDistribution multiset_distribution_serial(const Povm &povm, std::uint64_t cap = kDefaultEnumerationCap);

OutcomeDistribution outcome_distribution(const Povm &povm, std::uint64_t cap = kDefaultEnumerationCap);
OutcomeDistribution outcome_distribution_serial(const Povm &povm, std::uint64_t cap = kDefaultEnumerationCap);

/// Applies the clamping and renormalization rules above to raw per-multiset
/// weights. Shared with the ball-model distribution.
void finalize_weights(MultisetDistribution &dist, double clamp_below = 1e-9);

}  // namespace chansim
