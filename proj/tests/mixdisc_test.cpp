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

#include <gtest/gtest.h>

#include "chansim/combinatorics.hpp"
#include "chansim/random.hpp"

using namespace chansim;

namespace {

ComplexMatrix diag(std::vector<double> v) { return ComplexMatrix::diagonal(v); }

/// Left side of the lambda inequality, summed over all subsets Q directly.
double lemma1_lhs(const std::vector<double> &lambda, int r) {
    const auto n = lambda.size();
    double total = 0.0;
    for (unsigned q = 0; q < (1u << n); ++q) {
        int size = __builtin_popcount(q);
        int coeff = std::max(r - size, 0);
        if (coeff == 0) {
            continue;
        }
        double prod = 1.0;
        for (size_t m = 0; m < n; ++m) {
            prod *= (q & (1u << m)) ? 1.0 - lambda[m] : lambda[m];
        }
        total += coeff * prod;
    }
    return total;
}

double prefix(std::vector<double> v, int r) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (int i = 0; i < r; ++i) {
        s += v[static_cast<size_t>(i)];
    }
    return s;
}

}  // namespace

TEST(mixdisc, equal_arguments_give_determinant) {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto e = sample::hermitian(3, rng);
        std::vector<ComplexMatrix> args(3, e);
        EXPECT_NEAR(mixed_discriminant(args), e.determinant().real(), 1e-9);
    }
}

TEST(mixdisc, two_projectors_hand_expansion) {
    // Identity ordering gives det diag(1, 1) = 1, the swap gives det 0.
    std::vector<ComplexMatrix> args{diag({1, 0}), diag({0, 1})};
    EXPECT_NEAR(mixed_discriminant(args), 0.5, 1e-15);
}

TEST(mixdisc, psd_arguments_nonnegative) {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ComplexMatrix> args;
        for (int i = 0; i < 3; ++i) {
            args.push_back(sample::density(3, rng).matrix);
        }
        EXPECT_GE(mixed_discriminant(args), -1e-10);
    }
}

TEST(mixdisc, multilinear_and_symmetric) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = sample::hermitian(3, rng);
        auto b = sample::hermitian(3, rng);
        auto c = sample::hermitian(3, rng);
        auto d = sample::hermitian(3, rng);
        double alpha = 0.7, beta = -1.3;
        std::vector<ComplexMatrix> mixed{a * Complex(alpha) + b * Complex(beta), c, d};
        std::vector<ComplexMatrix> first{a, c, d};
        std::vector<ComplexMatrix> second{b, c, d};
        EXPECT_NEAR(mixed_discriminant(mixed), alpha * mixed_discriminant(first) + beta * mixed_discriminant(second),
                    1e-8);
        std::vector<ComplexMatrix> swapped{d, a, c};
        EXPECT_NEAR(mixed_discriminant(first), mixed_discriminant(swapped), 1e-10);
    }
}

TEST(mixdisc, dimension_mismatch) {
    std::vector<ComplexMatrix> args{diag({1, 0}), diag({0, 1, 0})};
    try {
        mixed_discriminant(args);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(mixdisc, projective_qubit_distribution) {
    auto dist = outcome_distribution(Povm{{diag({1, 0}), diag({0, 1})}});
    EXPECT_NEAR(dist.weight({0, 1}), 0.5, 1e-15);
    EXPECT_NEAR(dist.weight({1, 0}), 0.5, 1e-15);
    EXPECT_EQ(dist.weight({0, 0}), 0.0);
    EXPECT_EQ(dist.weight({1, 1}), 0.0);
    EXPECT_EQ(dist.weights.size(), 2u);
}

TEST(mixdisc, trivial_povm) {
    auto dist = outcome_distribution(Povm{{ComplexMatrix::identity(3)}});
    EXPECT_NEAR(dist.weight({0, 0, 0}), 1.0, 1e-15);
}

TEST(mixdisc, random_povm_mass_and_sign) {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 2 + static_cast<size_t>(trial % 3);
        auto p = sample::povm(n, 3, rng);
        auto dist = multiset_distribution(p);
        EXPECT_NEAR(dist.mass(), 1.0, 1e-9);
        for (double w : dist.per_tuple) {
            EXPECT_GE(w, 0.0);
        }
    }
}

TEST(mixdisc, parallel_matches_serial) {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = sample::povm(3, 4, rng);
        auto a = multiset_distribution(p);
        auto b = multiset_distribution_serial(p);
        ASSERT_EQ(a.multisets, b.multisets);
        for (size_t t = 0; t < a.per_tuple.size(); ++t) {
            EXPECT_EQ(a.per_tuple[t], b.per_tuple[t]);
        }
        EXPECT_EQ(outcome_distribution(p).weights, outcome_distribution_serial(p).weights);
    }
}

TEST(mixdisc, tuple_weights_match_direct_discriminant) {
    Rng rng(6);
    auto p = sample::povm(2, 3, rng);
    auto dist = outcome_distribution(p);
    for (const auto &tuple : enumerate_tuples(3, 2)) {
        std::vector<ComplexMatrix> args{p.outcomes[static_cast<size_t>(tuple[0])],
                                        p.outcomes[static_cast<size_t>(tuple[1])]};
        EXPECT_NEAR(dist.weight(tuple), std::max(0.0, mixed_discriminant(args)), 1e-12);
    }
}

TEST(mixdisc, enumeration_cap) {
    Rng rng(7);
    auto p = sample::povm(3, 4, rng);
    try {
        multiset_distribution(p, 10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EnumerationCapExceeded);
    }
}

TEST(mixdisc, symmetric_mixed_examples) {
    auto id = ComplexMatrix::identity(3);
    EXPECT_NEAR(symmetric_mixed(id, 0, 3), 1.0, 1e-15);
    EXPECT_NEAR(symmetric_mixed(id, 1, 3), 0.0, 1e-15);
    EXPECT_NEAR(symmetric_mixed(id, 3, 3), 0.0, 1e-15);
}

TEST(mixdisc, lemma_lambda_inequality) {
    Rng rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t n = 1 + static_cast<size_t>(trial % 6);
        std::vector<double> lambda(n);
        for (auto &x : lambda) {
            x = u(rng);
        }
        for (int r = 1; r <= static_cast<int>(n); ++r) {
            EXPECT_LE(lemma1_lhs(lambda, r), prefix(lambda, r) + 1e-12);
        }
    }
}

TEST(mixdisc, diagonal_symmetric_mixed_matches_subset_sum) {
    // For diagonal F the weighted sum over q equals the subset form of the
    // lambda inequality.
    Rng rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3;
        std::vector<double> lambda(n);
        for (auto &x : lambda) {
            x = u(rng);
        }
        auto f = ComplexMatrix::diagonal(lambda);
        for (int r = 1; r <= n; ++r) {
            double lhs = 0.0;
            for (int q = 0; q < r; ++q) {
                lhs += (r - q) * static_cast<double>(binomial(n, q)) * symmetric_mixed(f, q, n);
            }
            EXPECT_NEAR(lhs, lemma1_lhs(lambda, r), 1e-10);
        }
    }
}

TEST(mixdisc, lemma_contraction_inequality) {
    Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 3;
        auto e = sample::contraction(static_cast<size_t>(n), rng);
        auto lambda = hermitian_eigenvalues(e).values;
        for (int r = 1; r <= n; ++r) {
            double lhs = 0.0;
            for (int q = 0; q < r; ++q) {
                lhs += (r - q) * static_cast<double>(binomial(n, q)) * symmetric_mixed(e, q, n);
            }
            EXPECT_LE(lhs, prefix(lambda, r) + 1e-8);
        }
    }
}

TEST(mixdisc, lemma_povm_inequality) {
    Rng rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        const size_t n = 2 + static_cast<size_t>(trial % 2);
        const size_t k = 3;
        auto p = sample::povm(n, k, rng);
        std::vector<double> u(k);
        for (auto &x : u) {
            x = g(rng);
        }
        ComplexMatrix e(n);
        for (size_t i = 0; i < k; ++i) {
            e += p.outcomes[i] * Complex(u[i]);
        }
        auto lambda = hermitian_eigenvalues(e).values;
        auto dist = outcome_distribution(p);
        for (int r = 1; r <= static_cast<int>(n); ++r) {
            double lhs = 0.0;
            for (const auto &[tuple, w] : dist.weights) {
                std::vector<double> vals;
                for (int i : tuple) {
                    vals.push_back(u[static_cast<size_t>(i)]);
                }
                lhs += w * prefix(vals, r);
            }
            EXPECT_LE(lhs, prefix(lambda, r) + 1e-8);
        }
    }
}
