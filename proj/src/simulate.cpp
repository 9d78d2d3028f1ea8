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

#include "chansim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chansim/combinatorics.hpp"
#include "chansim/majorize.hpp"
#include "chansim/transport.hpp"
#include "parallel.hpp"

namespace chansim {

namespace {

/// Multisets kept for simulation, with their total weight p_M (summed over
/// orderings) and the per-tuple share.
struct KeptSupport {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> multisets;
    std::vector<double> total;
    std::vector<double> per_tuple;
    std::vector<std::uint64_t> orderings;
};

KeptSupport keep_support(const MultisetDistribution &dist, double threshold, bool renormalize) {
    KeptSupport s;
    s.n = dist.n;
    s.k = dist.k;
    double mass = 0.0;
    for (size_t t = 0; t < dist.multisets.size(); ++t) {
        double tot = dist.per_tuple[t] * static_cast<double>(dist.orderings[t]);
        if (tot > threshold) {
            s.multisets.push_back(dist.multisets[t]);
            s.total.push_back(tot);
            s.per_tuple.push_back(dist.per_tuple[t]);
            s.orderings.push_back(dist.orderings[t]);
            mass += tot;
        }
    }
    if (s.multisets.empty()) {
        throw Error(ErrorCode::NumericalBreakdown, "outcome distribution has no usable support");
    }
    if (renormalize) {
        for (size_t t = 0; t < s.total.size(); ++t) {
            s.total[t] /= mass;
            s.per_tuple[t] /= mass;
        }
    }
    return s;
}

/// Per kept multiset, an n x l matrix of slot distributions. Slots for the
/// same output are interchangeable; transported mass goes to the first.
using SlotColumns = std::vector<Matrix>;

SlotColumns transport_columns(const KeptSupport &support, const Matrix &a, bool parallel) {
    const size_t l = a.cols();
    const size_t kk = a.rows();
    const auto n = static_cast<size_t>(support.n);
    SlotColumns out(support.multisets.size(), Matrix(n, l));
    std::vector<std::vector<bool>> dropped(l, std::vector<bool>(support.multisets.size(), false));

    TransportInstance base;
    base.left_supply = support.total;
    for (size_t t = 0; t < support.multisets.size(); ++t) {
        const auto &ms = support.multisets[t];
        for (size_t m = 0; m < ms.size(); ++m) {
            if (m == 0 || ms[m] != ms[m - 1]) {
                base.edges.emplace_back(static_cast<int>(t), ms[m]);
            }
        }
    }
    const double supply_total = std::accumulate(support.total.begin(), support.total.end(), 0.0);

    detail::for_each_index(l, parallel, [&](size_t j) {
        TransportInstance inst = base;
        inst.right_demand = a.column(j);
        double demand_total = std::accumulate(inst.right_demand.begin(), inst.right_demand.end(), 0.0);
        if (std::abs(demand_total - supply_total) > 1e-6) {
            throw Error(ErrorCode::UnbalancedInstance, "column " + std::to_string(j) + " is not stochastic");
        }
        for (auto &d : inst.right_demand) {
            d *= supply_total / demand_total;
        }
        auto result = feasible_transport(inst);
        if (const auto *v = std::get_if<HallViolator>(&result)) {
            throw Error(ErrorCode::TransportInfeasible,
                        "column " + std::to_string(j) + ": demand " + std::to_string(v->demand) +
                            " exceeds supply " + std::to_string(v->supply));
        }
        auto cond = conditional_columns(std::get<TransportPlan>(result), inst.left_supply);
        for (size_t t = 0; t < support.multisets.size(); ++t) {
            auto it = cond.find(static_cast<int>(t));
            if (it == cond.end()) {
                dropped[j][t] = true;
                continue;
            }
            const auto &ms = support.multisets[t];
            for (size_t i = 0; i < kk; ++i) {
                if (it->second[i] == 0.0) {
                    continue;
                }
                auto slot = static_cast<size_t>(std::find(ms.begin(), ms.end(), static_cast<int>(i)) - ms.begin());
                out[t](slot, j) += it->second[i];
            }
        }
    });
    for (size_t j = 0; j < l; ++j) {
        for (size_t t = 0; t < support.multisets.size(); ++t) {
            if (dropped[j][t]) {
                throw Error(ErrorCode::TransportInfeasible, "multiset lost its supply during transport");
            }
        }
    }
    return out;
}

/// One protocol per ordering of each kept multiset, in lexicographic tuple
/// order. Slot ord[a] of tuple I takes row a of the multiset's columns, where
/// ord is the stable argsort of I.
std::vector<MixtureTerm> expand_to_tuples(const KeptSupport &support, const SlotColumns &columns) {
    struct Entry {
        std::vector<int> tuple;
        size_t multiset;
    };
    std::vector<Entry> entries;
    for (size_t t = 0; t < support.multisets.size(); ++t) {
        auto tuple = support.multisets[t];
        do {
            entries.push_back({tuple, t});
        } while (std::next_permutation(tuple.begin(), tuple.end()));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.tuple < y.tuple; });

    const auto n = static_cast<size_t>(support.n);
    std::vector<MixtureTerm> terms;
    terms.reserve(entries.size());
    for (const auto &e : entries) {
        const Matrix &src = columns[e.multiset];
        std::vector<size_t> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](size_t x, size_t y) { return e.tuple[x] < e.tuple[y]; });
        MixtureTerm term;
        term.weight = support.per_tuple[e.multiset];
        term.protocol.k = static_cast<size_t>(support.k);
        term.protocol.decoder = e.tuple;
        term.protocol.states = Matrix(n, src.cols());
        for (size_t a = 0; a < n; ++a) {
            for (size_t j = 0; j < src.cols(); ++j) {
                term.protocol.states(ord[a], j) = src(a, j);
            }
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

SimulationResult finish(TransitionMatrix target, ClassicalMixture mixture) {
    double residual = reconstruction_residual(mixture, target);
    if (residual > kResidualTol) {
        throw Error(ErrorCode::NumericalBreakdown, "reconstruction residual " + std::to_string(residual));
    }
    return SimulationResult{std::move(target), std::move(mixture), residual};
}

void require_noise_columns(const ClassicalMixture &mixture) {
    for (const auto &term : mixture.terms) {
        for (size_t j = 0; j < term.protocol.states.cols(); ++j) {
            if (!satisfies_noise(term.protocol.states.column(j), mixture.noise, j, 1e-9)) {
                throw Error(ErrorCode::NumericalBreakdown,
                            "protocol column " + std::to_string(j) + " leaves the declared noise set");
            }
        }
    }
}

std::vector<double> ascending_spectrum(const DensityMatrix &rho) {
    auto values = hermitian_eigenvalues(rho.matrix).values;
    double total = 0.0;
    for (auto &v : values) {
        v = std::max(v, 0.0);
        total += v;
    }
    for (auto &v : values) {
        v /= total;
    }
    return values;
}

void validate_quantum(const Povm &povm, std::span<const DensityMatrix> states) {
    require_valid(povm);
    if (states.empty()) {
        throw Error(ErrorCode::InvalidInput, "no input states");
    }
    for (const auto &rho : states) {
        if (rho.matrix.dim() != povm.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "state dimension does not match POVM");
        }
        require_valid(rho);
    }
}

MultisetDistribution distribution_for(const Povm &povm, const SimulationOptions &opts) {
    return opts.parallel ? multiset_distribution(povm, opts.cap) : multiset_distribution_serial(povm, opts.cap);
}

/// Feasibility program for one input column in variables y[t * n + m]:
/// subset lower bounds for every nonempty H and every multiset, plus the
/// output equalities.
lp::LinearProgram column_program(const KeptSupport &support, std::span<const double> mu, std::span<const double> column) {
    const auto n = static_cast<size_t>(support.n);
    const size_t count = support.multisets.size();
    lp::LinearProgram prog;
    prog.variables = count * n;
    std::vector<double> prefix(n + 1, 0.0);
    for (size_t r = 0; r < n; ++r) {
        prefix[r + 1] = prefix[r] + mu[r];
    }
    for (size_t t = 0; t < count; ++t) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<double> coeffs(prog.variables, 0.0);
            size_t size = 0;
            for (size_t m = 0; m < n; ++m) {
                if (mask & (1u << m)) {
                    coeffs[t * n + m] = 1.0;
                    ++size;
                }
            }
            prog.add(std::move(coeffs), lp::Relation::GreaterEqual, support.total[t] * prefix[size]);
        }
    }
    for (size_t i = 0; i < column.size(); ++i) {
        std::vector<double> coeffs(prog.variables, 0.0);
        for (size_t t = 0; t < count; ++t) {
            for (size_t m = 0; m < n; ++m) {
                if (support.multisets[t][m] == static_cast<int>(i)) {
                    coeffs[t * n + m] = 1.0;
                }
            }
        }
        prog.add(std::move(coeffs), lp::Relation::Equal, column[i]);
    }
    return prog;
}

}  // namespace

double reconstruction_residual(const ClassicalMixture &mixture, const TransitionMatrix &target) {
    return mixture_matrix(mixture).matrix().max_abs_diff(target.matrix());
}

SimulationResult simulate_quantum_noiseless(const Povm &povm, std::span<const DensityMatrix> states,
                                            const SimulationOptions &opts) {
    validate_quantum(povm, states);
    TransitionMatrix target = born_matrix(povm, states);
    KeptSupport support = keep_support(distribution_for(povm, opts), kNegligibleSupply, true);
    SlotColumns columns = transport_columns(support, target.matrix(), opts.parallel);

    ClassicalMixture mixture;
    mixture.states = povm.dim();
    mixture.noise = noise::Noiseless{};
    mixture.terms = expand_to_tuples(support, columns);
    return finish(std::move(target), std::move(mixture));
}

SimulationResult simulate_quantum_noisy(const Povm &povm, std::span<const DensityMatrix> states,
                                        const NoiseSpec &spec, const SimulationOptions &opts) {
    validate_quantum(povm, states);
    const size_t n = povm.dim();
    if (n > 6) {
        throw Error(ErrorCode::BadRange, "noisy simulation supports dimension at most 6");
    }
    std::vector<std::vector<double>> spectra;
    for (size_t j = 0; j < states.size(); ++j) {
        spectra.push_back(ascending_spectrum(states[j]));
        if (!satisfies_noise(spectra.back(), spec, j, 1e-9)) {
            throw Error(ErrorCode::PreconditionViolated,
                        "spectrum of state " + std::to_string(j) + " is outside its noise set");
        }
    }
    TransitionMatrix target = born_matrix(povm, states);
    KeptSupport support = keep_support(distribution_for(povm, opts), 1e-10, true);
    const size_t count = support.multisets.size();
    SlotColumns columns(count, Matrix(n, states.size()));

    detail::for_each_index(states.size(), opts.parallel, [&](size_t j) {
        auto prog = column_program(support, spectra[j], target.matrix().column(j));
        auto result = lp::solve(prog);
        if (auto *inf = std::get_if<lp::Infeasible>(&result)) {
            throw LpInfeasibleError(j, inf->certificate);
        }
        const auto &y = std::get<lp::Feasible>(result).x;
        for (size_t t = 0; t < count; ++t) {
            double sum = 0.0;
            for (size_t m = 0; m < n; ++m) {
                double x = std::max(0.0, y[t * n + m] / support.total[t]);
                columns[t](m, j) = x;
                sum += x;
            }
            for (size_t m = 0; m < n; ++m) {
                columns[t](m, j) /= sum;
            }
        }
    });

    ClassicalMixture mixture;
    mixture.states = n;
    mixture.noise = spec;
    mixture.terms = expand_to_tuples(support, columns);
    require_noise_columns(mixture);
    return finish(std::move(target), std::move(mixture));
}

namespace {

MultisetDistribution prepare_bracket(const BallModel &model, std::uint64_t cap) {
    validate_ball_model(model);
    MultisetDistribution dist;
    dist.n = model.norm_index;
    dist.k = static_cast<int>(model.effects.size());
    if (tuple_count(dist.k, dist.n, cap) == 0) {
        throw Error(ErrorCode::EnumerationCapExceeded, "k^n exceeds the enumeration cap");
    }
    dist.multisets = enumerate_multisets(dist.k, dist.n);
    dist.per_tuple.assign(dist.multisets.size(), 0.0);
    dist.orderings.resize(dist.multisets.size());
    for (size_t t = 0; t < dist.multisets.size(); ++t) {
        dist.orderings[t] = multinomial_count(dist.multisets[t]);
    }
    return dist;
}

double bracket_of(const BallModel &model, const std::vector<int> &multiset) {
    std::vector<BallEffect> args;
    args.reserve(multiset.size());
    for (int i : multiset) {
        args.push_back(model.effects[static_cast<size_t>(i)]);
    }
    return bracket(args);
}

}  // namespace

MultisetDistribution bracket_distribution(const BallModel &model, std::uint64_t cap) {
    MultisetDistribution dist = prepare_bracket(model, cap);
    detail::for_each_index(dist.multisets.size(), true,
                           [&](size_t t) { dist.per_tuple[t] = bracket_of(model, dist.multisets[t]); });
    finalize_weights(dist, 1e-10);
    return dist;
}

MultisetDistribution bracket_distribution_serial(const BallModel &model, std::uint64_t cap) {
    MultisetDistribution dist = prepare_bracket(model, cap);
    for (size_t t = 0; t < dist.multisets.size(); ++t) {
        dist.per_tuple[t] = bracket_of(model, dist.multisets[t]);
    }
    finalize_weights(dist, 1e-10);
    return dist;
}

SimulationResult simulate_ball(const BallModel &model, double delta, const SimulationOptions &opts) {
    TransitionMatrix target = ball_born_matrix(model, delta);
    TransitionMatrix undamped = ball_born_matrix(model, 0.0);
    auto dist = opts.parallel ? bracket_distribution(model, opts.cap) : bracket_distribution_serial(model, opts.cap);
    KeptSupport support = keep_support(dist, kNegligibleSupply, true);
    SlotColumns columns = transport_columns(support, undamped.matrix(), opts.parallel);

    // B(I) = delta D(I) + (1 - delta) B'(I): mix every slot column with the
    // uniform distribution over slots.
    const auto n = static_cast<double>(model.norm_index);
    for (auto &x : columns) {
        for (size_t m = 0; m < x.rows(); ++m) {
            for (size_t j = 0; j < x.cols(); ++j) {
                x(m, j) = delta / n + (1.0 - delta) * x(m, j);
            }
        }
    }
    ClassicalMixture mixture;
    mixture.states = static_cast<size_t>(model.norm_index);
    mixture.noise = noise::Delta{delta};
    mixture.terms = expand_to_tuples(support, columns);
    require_noise_columns(mixture);
    return finish(std::move(target), std::move(mixture));
}

std::optional<BinomialWitness> binomial_test(std::span<const double> mu, int d, double tol) {
    const auto n = static_cast<int>(mu.size());
    if (d < 1 || d > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= d <= n");
    }
    std::vector<double> sorted(mu.begin(), mu.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> prefix(static_cast<size_t>(n) + 1, 0.0);
    for (int r = 0; r < n; ++r) {
        prefix[static_cast<size_t>(r) + 1] = prefix[static_cast<size_t>(r)] + sorted[static_cast<size_t>(r)];
    }
    const auto total = static_cast<double>(binomial(n, d));
    for (int r = n; r >= d; --r) {
        double bound = static_cast<double>(binomial(r, d)) / total;
        if (prefix[static_cast<size_t>(r)] < bound - tol) {
            return BinomialWitness{r, prefix[static_cast<size_t>(r)], bound, -1};
        }
    }
    return std::nullopt;
}

NoiselessSimulation simulate_noisy_by_noiseless(const NoiseSpec &spec, const ClassicalProtocol &target, int d) {
    validate_protocol(target);
    const auto n = static_cast<int>(target.n());
    if (d < 1 || d > n) {
        throw Error(ErrorCode::BadRange, "need 1 <= d <= n");
    }
    const size_t l = target.states.cols();

    // Spectrum-like base vector of each column's noise set.
    auto base_for = [&](size_t j) -> std::vector<double> {
        if (std::holds_alternative<noise::Noiseless>(spec)) {
            std::vector<double> v(static_cast<size_t>(n), 0.0);
            v.back() = 1.0;
            return v;
        }
        if (const auto *dl = std::get_if<noise::Delta>(&spec)) {
            return noisy_classical_extremals(n, dl->delta).front();
        }
        if (const auto *p = std::get_if<noise::Permutohedron>(&spec)) {
            return p->base;
        }
        const auto &cols = std::get<noise::PerColumn>(spec).columns;
        if (j >= cols.size()) {
            throw Error(ErrorCode::LengthMismatch, "no noise set for column " + std::to_string(j));
        }
        return cols[j].base;
    };

    const bool per_column = std::holds_alternative<noise::PerColumn>(spec);
    for (size_t j = 0; j < (per_column ? l : 1); ++j) {
        auto base = base_for(j);
        if (base.size() != static_cast<size_t>(n)) {
            throw Error(ErrorCode::LengthMismatch, "noise base length differs from state count");
        }
        if (auto w = binomial_test(base, d)) {
            w->column = per_column ? static_cast<int>(j) : -1;
            return *w;
        }
    }
    for (size_t j = 0; j < l; ++j) {
        if (!satisfies_noise(target.states.column(j), spec, j, 1e-9)) {
            throw Error(ErrorCode::NotMajorized, "target column " + std::to_string(j) + " violates the noise set");
        }
    }

    const auto nu = max_subset_distribution(n, d);
    std::vector<PermutationMixture> decomps;
    decomps.reserve(l);
    for (size_t j = 0; j < l; ++j) {
        decomps.push_back(hlp_decompose(target.states.column(j), nu));
    }

    const auto subsets = enumerate_subsets(n, d);
    const double weight = 1.0 / static_cast<double>(subsets.size());
    ClassicalMixture mixture;
    mixture.states = static_cast<size_t>(d);
    mixture.noise = noise::Noiseless{};
    for (const auto &subset : subsets) {
        MixtureTerm term;
        term.weight = weight;
        term.protocol.k = target.k;
        for (int s : subset) {
            term.protocol.decoder.push_back(target.decoder[static_cast<size_t>(s)]);
        }
        term.protocol.states = Matrix(static_cast<size_t>(d), l);
        for (size_t j = 0; j < l; ++j) {
            for (const auto &pt : decomps[j].terms) {
                // The element of S whose image under perm is largest.
                size_t pick = 0;
                int best = -1;
                for (size_t a = 0; a < subset.size(); ++a) {
                    int image = pt.perm[static_cast<size_t>(subset[a])];
                    if (image > best) {
                        best = image;
                        pick = a;
                    }
                }
                term.protocol.states(pick, j) += pt.weight;
            }
        }
        mixture.terms.push_back(std::move(term));
    }
    return finish(protocol_matrix(target), std::move(mixture));
}

SimulationResult reduce_rows(const TransitionMatrix &a, std::optional<std::vector<double>> p) {
    const size_t k = a.k();
    const size_t l = a.l();
    std::vector<double> headroom(k);
    double slack = 0.0;
    for (size_t i = 0; i < k; ++i) {
        double row_max = 0.0;
        for (size_t j = 0; j < l; ++j) {
            row_max = std::max(row_max, a(i, j));
        }
        headroom[i] = std::max(0.0, 1.0 - row_max);
        slack += headroom[i];
    }
    if (slack < 1.0 - 1e-9) {
        throw Error(ErrorCode::PreconditionViolated,
                    "sum of (1 - row max) is " + std::to_string(slack) + " < 1");
    }
    std::vector<double> weights;
    if (p) {
        if (p->size() != k) {
            throw Error(ErrorCode::LengthMismatch, "p must have one entry per row");
        }
        require_prob_vector(*p);
        for (size_t i = 0; i < k; ++i) {
            if ((*p)[i] > headroom[i] + 1e-9) {
                throw Error(ErrorCode::PreconditionViolated, "p_" + std::to_string(i) + " exceeds 1 - row max");
            }
        }
        weights = *p;
    } else {
        weights = headroom;
        for (auto &w : weights) {
            w /= slack;
        }
    }

    // Left node i carries p_i and ships to rows s != i; the conditional of
    // node i is column j of B(i).
    TransportInstance base;
    base.left_supply = weights;
    for (size_t i = 0; i < k; ++i) {
        for (size_t s = 0; s < k; ++s) {
            if (s != i) {
                base.edges.emplace_back(static_cast<int>(i), static_cast<int>(s));
            }
        }
    }
    std::vector<Matrix> blocks(k, Matrix(k, l));
    std::vector<bool> kept(k, false);
    for (size_t i = 0; i < k; ++i) {
        kept[i] = weights[i] > kNegligibleSupply;
    }
    for (size_t j = 0; j < l; ++j) {
        TransportInstance inst = base;
        inst.right_demand = a.matrix().column(j);
        double demand_total = std::accumulate(inst.right_demand.begin(), inst.right_demand.end(), 0.0);
        double supply_total = std::accumulate(weights.begin(), weights.end(), 0.0);
        for (auto &d : inst.right_demand) {
            d *= supply_total / demand_total;
        }
        auto result = feasible_transport(inst);
        if (std::holds_alternative<HallViolator>(result)) {
            throw Error(ErrorCode::TransportInfeasible, "column " + std::to_string(j) + " cannot be split");
        }
        auto cond = conditional_columns(std::get<TransportPlan>(result), inst.left_supply);
        for (auto &[i, column] : cond) {
            for (size_t s = 0; s < k; ++s) {
                blocks[static_cast<size_t>(i)](s, j) = column[s];
            }
        }
    }

    double kept_mass = 0.0;
    for (size_t i = 0; i < k; ++i) {
        if (kept[i]) {
            kept_mass += weights[i];
        }
    }
    ClassicalMixture mixture;
    mixture.states = k - 1;
    mixture.noise = noise::Noiseless{};
    for (size_t i = 0; i < k; ++i) {
        if (!kept[i]) {
            continue;
        }
        MixtureTerm term;
        term.weight = weights[i] / kept_mass;
        term.protocol.k = k;
        term.protocol.states = Matrix(k - 1, l);
        size_t slot = 0;
        for (size_t s = 0; s < k; ++s) {
            if (s == i) {
                continue;
            }
            term.protocol.decoder.push_back(static_cast<int>(s));
            for (size_t j = 0; j < l; ++j) {
                term.protocol.states(slot, j) = blocks[i](s, j);
            }
            ++slot;
        }
        mixture.terms.push_back(std::move(term));
    }
    return finish(a, std::move(mixture));
}

}  // namespace chansim
