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

#include "chansim/mixdisc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "chansim/combinatorics.hpp"

namespace chansim {

double OutcomeDistribution::mass() const {
    double s = 0.0;
    for (const auto &[tuple, w] : weights) {
        s += w;
    }
    return s;
}

double OutcomeDistribution::weight(const std::vector<int> &tuple) const {
    auto it = weights.find(tuple);
    return it == weights.end() ? 0.0 : it->second;
}

double MultisetDistribution::mass() const {
    double s = 0.0;
    for (size_t t = 0; t < multisets.size(); ++t) {
        s += per_tuple[t] * static_cast<double>(orderings[t]);
    }
    return s;
}

OutcomeDistribution MultisetDistribution::expand() const {
    OutcomeDistribution out;
    out.n = n;
    out.k = k;
    for (size_t t = 0; t < multisets.size(); ++t) {
        if (per_tuple[t] <= 0.0) {
            continue;
        }
        auto tuple = multisets[t];
        do {
            out.weights.emplace(tuple, per_tuple[t]);
        } while (std::next_permutation(tuple.begin(), tuple.end()));
    }
    return out;
}

Complex mixed_discriminant_complex(std::span<const ComplexMatrix> matrices) {
    const size_t n = matrices.size();
    if (n == 0) {
        throw Error(ErrorCode::DimensionMismatch, "mixed discriminant of zero matrices");
    }
    for (const auto &m : matrices) {
        if (m.dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, "mixed discriminant needs n matrices of size n");
        }
    }
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ComplexMatrix interleaved(n);
    Complex total = 0.0;
    double count = 0.0;
    do {
        for (size_t col = 0; col < n; ++col) {
            const auto &src = matrices[perm[col]];
            for (size_t r = 0; r < n; ++r) {
                interleaved(r, col) = src(r, col);
            }
        }
        total += interleaved.determinant();
        count += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / count;
}

double mixed_discriminant(std::span<const ComplexMatrix> matrices) {
    Complex d = mixed_discriminant_complex(matrices);
    if (std::abs(d.imag()) > 1e-8) {
        throw Error(ErrorCode::NonRealResult, "imaginary part " + std::to_string(d.imag()));
    }
    return d.real();
}

double symmetric_mixed(const ComplexMatrix &f, int q, int n) {
    if (f.dim() != static_cast<size_t>(n) || n <= 0) {
        throw Error(ErrorCode::DimensionMismatch, "F must be n-square");
    }
    if (q < 0 || q > n) {
        throw Error(ErrorCode::BadRange, "q must lie in [0, n]");
    }
    ComplexMatrix complement = ComplexMatrix::identity(f.dim()) - f;
    std::vector<ComplexMatrix> args;
    args.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n - q; ++t) {
        args.push_back(f);
    }
    for (int t = 0; t < q; ++t) {
        args.push_back(complement);
    }
    return mixed_discriminant(args);
}

void finalize_weights(MultisetDistribution &dist, double clamp_below) {
    for (size_t t = 0; t < dist.per_tuple.size(); ++t) {
        double &w = dist.per_tuple[t];
        if (w < -clamp_below) {
            throw Error(ErrorCode::NegativeWeight, "weight " + std::to_string(w) + " on a multiset");
        }
        if (w < 0.0) {
            w = 0.0;
        }
    }
    double mass = dist.mass();
    if (std::abs(mass - 1.0) > 1e-7) {
        throw Error(ErrorCode::MassDrift, "total mass " + std::to_string(mass));
    }
    for (auto &w : dist.per_tuple) {
        w /= mass;
    }
}

namespace {

MultisetDistribution prepare(const Povm &povm, std::uint64_t cap) {
    require_valid(povm);
    MultisetDistribution dist;
    dist.n = static_cast<int>(povm.dim());
    dist.k = static_cast<int>(povm.size());
    if (tuple_count(dist.k, dist.n, cap) == 0) {
        throw Error(ErrorCode::EnumerationCapExceeded,
                    "k^n exceeds the enumeration cap of " + std::to_string(cap));
    }
    dist.multisets = enumerate_multisets(dist.k, dist.n);
    dist.per_tuple.assign(dist.multisets.size(), 0.0);
    dist.orderings.resize(dist.multisets.size());
    for (size_t t = 0; t < dist.multisets.size(); ++t) {
        dist.orderings[t] = multinomial_count(dist.multisets[t]);
    }
    return dist;
}

double weight_of(const Povm &povm, const std::vector<int> &multiset) {
    std::vector<ComplexMatrix> args;
    args.reserve(multiset.size());
    for (int i : multiset) {
        args.push_back(povm.outcomes[static_cast<size_t>(i)]);
    }
    return mixed_discriminant(args);
}

}  // namespace

MultisetDistribution multiset_distribution(const Povm &povm, std::uint64_t cap) {
    MultisetDistribution dist = prepare(povm, cap);
    const auto count = static_cast<std::int64_t>(dist.multisets.size());
    std::vector<std::exception_ptr> failures(dist.multisets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            dist.per_tuple[static_cast<size_t>(t)] = weight_of(povm, dist.multisets[static_cast<size_t>(t)]);
        } catch (...) {
            failures[static_cast<size_t>(t)] = std::current_exception();
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    finalize_weights(dist);
    return dist;
}

MultisetDistribution multiset_distribution_serial(const Povm &povm, std::uint64_t cap) {
    MultisetDistribution dist = prepare(povm, cap);
    for (size_t t = 0; t < dist.multisets.size(); ++t) {
        dist.per_tuple[t] = weight_of(povm, dist.multisets[t]);
    }
    finalize_weights(dist);
    return dist;
}

OutcomeDistribution outcome_distribution(const Povm &povm, std::uint64_t cap) {
    return multiset_distribution(povm, cap).expand();
}

OutcomeDistribution outcome_distribution_serial(const Povm &povm, std::uint64_t cap) {
    return multiset_distribution_serial(povm, cap).expand();
}

}  // namespace chansim
