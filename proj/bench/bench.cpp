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

// Times the OpenMP kernels against their serial references.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <string>

#include <fmt/core.h>

#include "chansim/mixdisc.hpp"
#include "chansim/random.hpp"
#include "chansim/simulate.hpp"
#include "fixtures.hpp"

namespace {

using chansim::MultisetDistribution;

template <typename F>
double best_of(int reps, F &&f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

double max_diff(const MultisetDistribution &a, const MultisetDistribution &b) {
    double m = 0.0;
    for (size_t i = 0; i < a.per_tuple.size(); ++i) {
        m = std::max(m, std::abs(a.per_tuple[i] - b.per_tuple[i]));
    }
    return m;
}

void row(const std::string &name, double serial, double parallel, double diff) {
    fmt::print("{:<28} serial {:9.4f} s  parallel {:9.4f} s  speedup {:5.2f}x  max|diff| {:.2e}\n", name, serial,
               parallel, serial / parallel, diff);
}

}  // namespace

int main(int argc, char **argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    fmt::print("threads: {}\n", omp_get_max_threads());
    chansim::Rng rng(2026);

    for (auto [n, k] : {std::pair<size_t, size_t>{4, 6}, {5, 6}, {6, 6}}) {
        auto povm = chansim::sample::povm(n, k, rng);
        MultisetDistribution ser, par;
        double ts = best_of(reps, [&] { ser = chansim::multiset_distribution_serial(povm); });
        double tp = best_of(reps, [&] { par = chansim::multiset_distribution(povm); });
        row(fmt::format("multiset n={} k={}", n, k), ts, tp, max_diff(ser, par));
    }

    for (auto [n, k] : {std::pair<int, size_t>{4, 8}, {6, 6}, {8, 5}}) {
        auto model = chansim::fixtures::random_ball(n, 3, k, 4, rng);
        MultisetDistribution ser, par;
        double ts = best_of(reps, [&] { ser = chansim::bracket_distribution_serial(model); });
        double tp = best_of(reps, [&] { par = chansim::bracket_distribution(model); });
        row(fmt::format("bracket n={} k={}", n, k), ts, tp, max_diff(ser, par));
    }
    return 0;
}
