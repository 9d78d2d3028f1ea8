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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include <fmt/core.h>

#include "chansim/certify.hpp"
#include "chansim/combinatorics.hpp"
#include "chansim/majorize.hpp"
#include "chansim/mixdisc.hpp"
#include "chansim/random.hpp"
#include "chansim/simulate.hpp"
#include "fixtures.hpp"

using namespace chansim;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

int failures = 0;

void criterion(int id, const char *name, double limit_seconds, const std::function<Verdict()> &body) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception &e) {
        v.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && secs >= limit_seconds) {
        v.fail(fmt::format("runtime {:.3f} s over the {:.0f} s limit", secs, limit_seconds));
    }
    if (!v.pass) {
        ++failures;
    }
    fmt::print("{} {} {}: {} [{:.3f} s, limit {:.0f} s]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail, secs,
               limit_seconds);
    std::fflush(stdout);
}

double prefix(std::vector<double> v, int r) {
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (int i = 0; i < r; ++i) {
        s += v[static_cast<size_t>(i)];
    }
    return s;
}

Verdict octahedron_witness() {
    Verdict v;
    auto rep = pairwise_witness(fixtures::octahedron_matrix(), 2);
    if (rep.value != 6.0 || rep.bound != 5.0 || rep.pass) {
        v.fail(fmt::format("pairwise value {} bound {} pass {}", rep.value, rep.bound, rep.pass));
    }
    double m = minkowski_asymmetry(Polytope::octahedron());
    if (std::abs(m - 1.0) > 1e-6) {
        v.fail(fmt::format("asymmetry {}", m));
    }
    double infstor = m + 1.0;
    if (std::abs(infstor - 2.0) > 1e-6) {
        v.fail(fmt::format("infstor {}", infstor));
    }
    if (v.pass) {
        v.detail = fmt::format("value {} bound {} violation; asymmetry {:.9f}, infstor {:.9f}", rep.value, rep.bound,
                               m, infstor);
    }
    return v;
}

Verdict signalling_dimension() {
    Verdict v;
    int cases = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int q = 0; q <= 8; ++q) {
            Rational delta(q, 8);
            int formula = noisy_signalling_dimension(n, delta);
            int smallest = 0;
            for (int d = 1; d <= n && smallest == 0; ++d) {
                if (!delta_simulable_by_d(n, delta, d).has_value()) {
                    smallest = d;
                }
            }
            ++cases;
            if (formula != smallest) {
                v.fail(fmt::format("n={} delta={}: formula {} vs test {}", n, delta.to_string(), formula, smallest));
            }
        }
    }
    if (cases != 63) {
        v.fail(fmt::format("{} cases instead of 63", cases));
    }
    if (v.pass) {
        v.detail = fmt::format("{} cases agree exactly", cases);
    }
    return v;
}

Verdict quantum_reconstruction() {
    Verdict v;
    Rng rng(2026);
    std::uniform_int_distribution<int> kdist(2, 4), ldist(1, 3);
    double worst = 0.0;
    int runs = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const size_t n = trial % 2 == 0 ? 2 : 3;
        const auto k = static_cast<size_t>(kdist(rng));
        const auto l = static_cast<size_t>(ldist(rng));
        const double delta = trial % 4 < 2 ? 0.25 : 0.5;
        auto povm = sample::povm(n, k, rng);
        std::vector<DensityMatrix> states;
        for (size_t j = 0; j < l; ++j) {
            states.push_back(sample::noisy_density(n, delta, rng));
        }
        for (bool noisy : {false, true}) {
            auto r = noisy ? simulate_quantum_noisy(povm, states, noise::Delta{delta})
                           : simulate_quantum_noiseless(povm, states);
            ++runs;
            double residual = mixture_matrix(r.mixture).matrix().max_abs_diff(born_matrix(povm, states).matrix());
            worst = std::max(worst, residual);
            if (residual > 1e-8) {
                v.fail(fmt::format("trial {} residual {}", trial, residual));
            }
            auto defect = fixtures::mixture_defect(r.mixture, n);
            if (!defect.empty()) {
                v.fail(fmt::format("trial {}: {}", trial, defect));
            }
            if (noisy && !std::holds_alternative<noise::Delta>(r.mixture.noise)) {
                v.fail("noisy result lost its noise spec");
            }
        }
    }
    if (v.pass) {
        v.detail = fmt::format("{} simulations over 200 instances, worst residual {:.3g}", runs, worst);
    }
    return v;
}

Verdict ball_simulation() {
    Verdict v;
    Rng rng(2027);
    std::uniform_int_distribution<int> dimdist(1, 3), kdist(2, 4), ldist(1, 3);
    std::uniform_real_distribution<double> udelta(0.0, 1.0);
    double worst = 0.0;
    int bits = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = trial % 2 == 0 ? 2 : 4;
        auto model = fixtures::random_ball(n, static_cast<size_t>(dimdist(rng)), static_cast<size_t>(kdist(rng)),
                                           static_cast<size_t>(ldist(rng)), rng);
        const double delta = udelta(rng);
        auto r = simulate_ball(model, delta);
        double residual = mixture_matrix(r.mixture).matrix().max_abs_diff(ball_born_matrix(model, delta).matrix());
        worst = std::max(worst, residual);
        if (residual > 1e-8) {
            v.fail(fmt::format("trial {} residual {}", trial, residual));
        }
        auto defect = fixtures::mixture_defect(r.mixture, static_cast<size_t>(n));
        if (!defect.empty()) {
            v.fail(fmt::format("trial {}: {}", trial, defect));
        }
        const auto *spec = std::get_if<noise::Delta>(&r.mixture.noise);
        if (spec == nullptr || spec->delta != delta) {
            v.fail(fmt::format("trial {}: mixture not declared delta-noisy", trial));
        }
        if (n == 2) {
            for (const auto &t : r.mixture.terms) {
                if (t.protocol.n() != 2) {
                    v.fail(fmt::format("trial {}: component with {} states", trial, t.protocol.n()));
                }
            }
            ++bits;
        }
    }
    if (v.pass) {
        v.detail = fmt::format("50 instances ({} as delta-noisy bits), worst residual {:.3g}", bits, worst);
    }
    return v;
}

double lemma1_lhs(const std::vector<double> &lambda, int r) {
    double total = 0.0;
    for (unsigned q = 0; q < (1u << lambda.size()); ++q) {
        int coeff = std::max(r - __builtin_popcount(q), 0);
        if (coeff == 0) {
            continue;
        }
        double prod = 1.0;
        for (size_t m = 0; m < lambda.size(); ++m) {
            prod *= (q & (1u << m)) ? 1.0 - lambda[m] : lambda[m];
        }
        total += coeff * prod;
    }
    return total;
}

Verdict lemma_suite() {
    Verdict v;
    Rng rng(2028);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> g;
    double worst = -INFINITY;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<size_t>(1 + trial % 6);
        std::vector<double> lambda(n);
        for (auto &x : lambda) {
            x = u01(rng);
        }
        for (int r = 1; r <= static_cast<int>(n); ++r) {
            double gap = lemma1_lhs(lambda, r) - prefix(lambda, r);
            worst = std::max(worst, gap);
            if (gap > 1e-8) {
                v.fail(fmt::format("lambda inequality trial {} r {} gap {}", trial, r, gap));
            }
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 4;
        auto e = sample::contraction(static_cast<size_t>(n), rng);
        auto lambda = hermitian_eigenvalues(e).values;
        for (int r = 1; r <= n; ++r) {
            double lhs = 0.0;
            for (int q = 0; q < r; ++q) {
                lhs += (r - q) * static_cast<double>(binomial(n, q)) * symmetric_mixed(e, q, n);
            }
            double gap = lhs - prefix(lambda, r);
            worst = std::max(worst, gap);
            if (gap > 1e-8) {
                v.fail(fmt::format("contraction inequality trial {} r {} gap {}", trial, r, gap));
            }
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const size_t n = 2 + static_cast<size_t>(trial % 2);
        const size_t k = 2 + static_cast<size_t>(trial % 3);
        auto p = sample::povm(n, k, rng);
        std::vector<double> uvec(k);
        for (auto &x : uvec) {
            x = g(rng);
        }
        ComplexMatrix e(n);
        for (size_t i = 0; i < k; ++i) {
            e += p.outcomes[i] * Complex(uvec[i]);
        }
        auto lambda = hermitian_eigenvalues(e).values;
        auto dist = multiset_distribution(p);
        for (int r = 1; r <= static_cast<int>(n); ++r) {
            double lhs = 0.0;
            for (size_t t = 0; t < dist.multisets.size(); ++t) {
                std::vector<double> vals;
                for (int i : dist.multisets[t]) {
                    vals.push_back(uvec[static_cast<size_t>(i)]);
                }
                lhs += dist.per_tuple[t] * static_cast<double>(dist.orderings[t]) * prefix(vals, r);
            }
            double gap = lhs - prefix(lambda, r);
            worst = std::max(worst, gap);
            if (gap > 1e-8) {
                v.fail(fmt::format("POVM inequality trial {} r {} gap {}", trial, r, gap));
            }
        }
    }
    if (v.pass) {
        v.detail = fmt::format("3 x 1000 trials, largest lhs - rhs {:.3g}", worst);
    }
    return v;
}

Verdict mixed_discriminant_properties() {
    Verdict v;
    Rng rng(2029);
    double worst_det = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<size_t>(1 + trial % 4);
        auto e = sample::hermitian(n, rng);
        std::vector<ComplexMatrix> args(n, e);
        double diff = std::abs(mixed_discriminant(args) - e.determinant().real());
        worst_det = std::max(worst_det, diff);
        if (diff > 1e-9) {
            v.fail(fmt::format("D(E,...,E) off by {} at trial {}", diff, trial));
        }
    }
    double most_negative = INFINITY;
    double worst_mass = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<size_t>(2 + trial % 3);
        const auto k = static_cast<size_t>(2 + trial % 3);
        auto p = sample::povm(n, k, rng);
        double raw_mass = 0.0;
        for (const auto &ms : enumerate_multisets(static_cast<int>(k), static_cast<int>(n))) {
            std::vector<ComplexMatrix> args;
            for (int i : ms) {
                args.push_back(p.outcomes[static_cast<size_t>(i)]);
            }
            double w = mixed_discriminant(args);
            most_negative = std::min(most_negative, w);
            raw_mass += w * static_cast<double>(multinomial_count(ms));
            if (w < -1e-10) {
                v.fail(fmt::format("p_I = {} at trial {}", w, trial));
            }
        }
        worst_mass = std::max(worst_mass, std::abs(raw_mass - 1.0));
        if (std::abs(raw_mass - 1.0) > 1e-9) {
            v.fail(fmt::format("sum p_I = {} at trial {}", raw_mass, trial));
        }
        double mass = multiset_distribution(p).mass();
        if (std::abs(mass - 1.0) > 1e-9) {
            v.fail(fmt::format("distribution mass {} at trial {}", mass, trial));
        }
    }
    if (v.pass) {
        v.detail = fmt::format("det gap {:.3g}, min p_I {:.3g}, mass drift {:.3g}", worst_det, most_negative,
                               worst_mass);
    }
    return v;
}

Verdict majorization_construction() {
    Verdict v;
    Rng rng(2030);
    std::uniform_int_distribution<int> ndist(1, 6), kdist(2, 4), ldist(1, 3);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = ndist(rng);
        std::uniform_int_distribution<int> ddist(1, n);
        const int d = ddist(rng);
        auto mu = sample::prob_vector(static_cast<size_t>(n), rng);
        std::sort(mu.begin(), mu.end());
        while (permutohedron_simulable_by_d(mu, d).has_value()) {
            for (auto &x : mu) {
                x = 0.5 * x + 0.5 / n;
            }
        }
        ClassicalProtocol target;
        target.k = static_cast<size_t>(kdist(rng));
        std::uniform_int_distribution<int> out(0, static_cast<int>(target.k) - 1);
        for (int m = 0; m < n; ++m) {
            target.decoder.push_back(out(rng));
        }
        const auto l = static_cast<size_t>(ldist(rng));
        target.states = Matrix(static_cast<size_t>(n), l);
        for (size_t j = 0; j < l; ++j) {
            auto w = sample::prob_vector(3, rng);
            for (double wt : w) {
                std::vector<int> perm(static_cast<size_t>(n));
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                for (size_t m = 0; m < perm.size(); ++m) {
                    target.states(m, j) += wt * mu[static_cast<size_t>(perm[m])];
                }
            }
        }
        auto result = simulate_noisy_by_noiseless(noise::Permutohedron{mu}, target, d);
        const auto *sim = std::get_if<SimulationResult>(&result);
        if (sim == nullptr) {
            v.fail(fmt::format("trial {}: witness returned for a feasible spectrum", trial));
            continue;
        }
        double residual = mixture_matrix(sim->mixture).matrix().max_abs_diff(protocol_matrix(target).matrix());
        worst = std::max(worst, residual);
        if (residual > 1e-8) {
            v.fail(fmt::format("trial {} residual {}", trial, residual));
        }
        auto defect = fixtures::mixture_defect(sim->mixture, static_cast<size_t>(d));
        if (!defect.empty()) {
            v.fail(fmt::format("trial {}: {}", trial, defect));
        }
    }
    if (v.pass) {
        v.detail = fmt::format("100 pairs, worst residual {:.3g}", worst);
    }
    return v;
}

Verdict holevo_diagnostic() {
    Verdict v;
    Rng rng(2031);
    double worst = -INFINITY;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<size_t>(2 + trial % 3);
        const auto l = static_cast<size_t>(2 + trial % 2);
        std::vector<DensityMatrix> states;
        for (size_t j = 0; j < l; ++j) {
            states.push_back(sample::density(n, rng));
        }
        auto q = sample::prob_vector(l, rng);
        auto p = sample::povm(n, 2 + static_cast<size_t>(trial % 3), rng);
        double gap = mutual_information(born_matrix(p, states), q) - holevo_chi(states, q);
        worst = std::max(worst, gap);
        if (gap > 1e-9) {
            v.fail(fmt::format("trial {}: Info exceeds chi by {}", trial, gap));
        }
    }
    double worst_eq = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const size_t n = 3;
        std::vector<DensityMatrix> states;
        for (int j = 0; j < 3; ++j) {
            states.push_back({ComplexMatrix::diagonal(sample::prob_vector(n, rng))});
        }
        auto q = sample::prob_vector(3, rng);
        Povm proj;
        for (size_t i = 0; i < n; ++i) {
            std::vector<double> e(n, 0.0);
            e[i] = 1.0;
            proj.outcomes.push_back(ComplexMatrix::diagonal(e));
        }
        double diff = std::abs(mutual_information(born_matrix(proj, states), q) - holevo_chi(states, q));
        worst_eq = std::max(worst_eq, diff);
        if (diff > 1e-6) {
            v.fail(fmt::format("commuting trial {}: |Info - chi| = {}", trial, diff));
        }
    }
    if (v.pass) {
        v.detail = fmt::format("max Info - chi {:.3g}; commuting gap {:.3g}", worst, worst_eq);
    }
    return v;
}

}  // namespace

int main() {
    criterion(1, "octahedron witness", 1, octahedron_witness);
    criterion(2, "noisy signalling dimension", 1, signalling_dimension);
    criterion(3, "quantum to classical reconstruction", 60, quantum_reconstruction);
    criterion(4, "ball simulation", 30, ball_simulation);
    criterion(5, "lemma suite", 60, lemma_suite);
    criterion(6, "mixed discriminant properties", 60, mixed_discriminant_properties);
    criterion(7, "majorization construction", 60, majorization_construction);
    criterion(8, "holevo diagnostic", 60, holevo_diagnostic);
    fmt::print("{} of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
