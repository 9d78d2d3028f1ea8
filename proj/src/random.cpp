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

#include "chansim/random.hpp"

#include <cmath>

namespace chansim::sample {

namespace {

ComplexMatrix gaussian(size_t n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

ComplexMatrix hermitian(size_t n, Rng &rng) {
    ComplexMatrix g = gaussian(n, rng);
    return (g + g.adjoint()) * Complex(0.5);
}

ComplexMatrix unitary(size_t n, Rng &rng) {
    ComplexMatrix g = gaussian(n, rng);
    for (size_t c = 0; c < n; ++c) {
        for (size_t prev = 0; prev < c; ++prev) {
            Complex dot = 0.0;
            for (size_t r = 0; r < n; ++r) {
                dot += std::conj(g(r, prev)) * g(r, c);
            }
            for (size_t r = 0; r < n; ++r) {
                g(r, c) -= dot * g(r, prev);
            }
        }
        double norm = 0.0;
        for (size_t r = 0; r < n; ++r) {
            norm += std::norm(g(r, c));
        }
        norm = std::sqrt(norm);
        for (size_t r = 0; r < n; ++r) {
            g(r, c) /= norm;
        }
    }
    return g;
}

std::vector<double> prob_vector(size_t n, Rng &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> out(n);
    double total = 0.0;
    for (auto &v : out) {
        v = expo(rng);
        total += v;
    }
    for (auto &v : out) {
        v /= total;
    }
    return out;
}

ComplexMatrix with_spectrum(std::span<const double> values, Rng &rng) {
    ComplexMatrix u = unitary(values.size(), rng);
    ComplexMatrix m = from_eigen(values, u);
    return (m + m.adjoint()) * Complex(0.5);
}

DensityMatrix density(size_t n, Rng &rng) {
    auto spectrum = prob_vector(n, rng);
    return DensityMatrix{with_spectrum(spectrum, rng)};
}

DensityMatrix noisy_density(size_t n, double delta, Rng &rng) {
    auto spectrum = prob_vector(n, rng);
    for (auto &v : spectrum) {
        v = delta / static_cast<double>(n) + (1.0 - delta) * v;
    }
    return DensityMatrix{with_spectrum(spectrum, rng)};
}

Povm povm(size_t n, size_t k, Rng &rng) {
    std::vector<ComplexMatrix> parts;
    ComplexMatrix total(n);
    for (size_t i = 0; i < k; ++i) {
        ComplexMatrix g = gaussian(n, rng);
        ComplexMatrix psd = g * g.adjoint();
        psd = (psd + psd.adjoint()) * Complex(0.5);
        total += psd;
        parts.push_back(std::move(psd));
    }
    auto eig = hermitian_eigen(total);
    std::vector<double> inv_sqrt(n);
    for (size_t t = 0; t < n; ++t) {
        inv_sqrt[t] = 1.0 / std::sqrt(eig.spectrum.values[t]);
    }
    ComplexMatrix w = from_eigen(inv_sqrt, eig.vectors);
    Povm out;
    for (auto &g : parts) {
        ComplexMatrix e = w * g * w;
        out.outcomes.push_back((e + e.adjoint()) * Complex(0.5));
    }
    return out;
}

ComplexMatrix contraction(size_t n, Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(n);
    for (auto &v : values) {
        v = unit(rng);
    }
    return with_spectrum(values, rng);
}

}  // namespace chansim::sample
