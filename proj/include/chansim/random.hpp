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

#include <random>
#include <vector>

#include "chansim/linalg.hpp"

namespace chansim {

using Rng = std::mt19937_64;

/// Samplers used by the fixtures, the test suites and the benchmark.
namespace sample {

/// Entries with independent standard normal real and imaginary parts, then
/// symmetrized.
ComplexMatrix hermitian(size_t n, Rng &rng);

/// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix unitary(size_t n, Rng &rng);

/// Uniform point of the probability simplex.
std::vector<double> prob_vector(size_t n, Rng &rng);

/// U diag(values) U^* with U = unitary(n).
ComplexMatrix with_spectrum(std::span<const double> values, Rng &rng);

/// Random full-rank state.
DensityMatrix density(size_t n, Rng &rng);

/// State whose eigenvalues are all >= delta / n.
DensityMatrix noisy_density(size_t n, double delta, Rng &rng);

/// E_i = S^{-1/2} G_i S^{-1/2} with G_i random PSD and S = sum G_i.
Povm povm(size_t n, size_t k, Rng &rng);

/// Hermitian 0 <= E <= 1 with uniform random eigenvalues.
ComplexMatrix contraction(size_t n, Rng &rng);

}  // namespace sample
}  // namespace chansim
