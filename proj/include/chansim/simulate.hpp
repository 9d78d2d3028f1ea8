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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "chansim/channels.hpp"
#include "chansim/error.hpp"
#include "chansim/linalg.hpp"
#include "chansim/lp.hpp"
#include "chansim/mixdisc.hpp"

namespace chansim {

/// A classical mixture together with the matrix it reproduces.
struct SimulationResult {
    TransitionMatrix target;
    ClassicalMixture mixture;
    /// max |mixture_matrix - target| over entries.
    double residual = 0.0;
};

struct SimulationOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    /// Run per-multiset and per-column kernels on OpenMP threads.
    bool parallel = true;
};

inline constexpr double kResidualTol = 1e-8;

/// Raised when a per-column feasibility program that should always be
/// solvable is reported infeasible; carries the Farkas vector.
class LpInfeasibleError : public Error {
  public:
    LpInfeasibleError(size_t column, lp::FarkasCertificate cert)
        : Error(ErrorCode::LpInfeasible, "column " + std::to_string(column) + " program is infeasible"),
          column_(column),
          cert_(std::move(cert)) {}

    size_t column() const { return column_; }
    const lp::FarkasCertificate &certificate() const { return cert_; }

  private:
    size_t column_;
    lp::FarkasCertificate cert_;
};

/// Largest entrywise gap between the mixture's matrix and target.
double reconstruction_residual(const ClassicalMixture &mixture, const TransitionMatrix &target);

/// Quantum channel -> mixture of n-state noiseless classical protocols, one
/// per tuple I with p_I > 0. Column j of each protocol comes from a transport
/// between p and the Born column (edge iff the output occurs in I).
SimulationResult simulate_quantum_noiseless(const Povm &povm, std::span<const DensityMatrix> states,
                                            const SimulationOptions &opts = {});

/// As above, but every protocol column lies in the permutohedron of the
/// corresponding state's spectrum, hence in the noise set. One feasibility
/// program per input column in scaled variables y = p_I x_I.
SimulationResult simulate_quantum_noisy(const Povm &povm, std::span<const DensityMatrix> states,
                                        const NoiseSpec &spec, const SimulationOptions &opts = {});

/// delta-noisy ball channel -> mixture of delta-noisy classical protocols on
/// norm_index states, weighted by the bracket distribution.
SimulationResult simulate_ball(const BallModel &model, double delta, const SimulationOptions &opts = {});

/// Prefix-sum test failure: mu_1 + ... + mu_r < C(r, d) / C(n, d).
struct BinomialWitness {
    int r = 0;
    double prefix = 0.0;
    double bound = 0.0;
    /// Input column whose noise set fails, or -1 for a shared spec.
    int column = -1;
};

using NoiselessSimulation = std::variant<SimulationResult, BinomialWitness>;

/// Simulates a noisy n-state protocol by noiseless d-state ones through the
/// uniform random d-subset construction, or returns the largest failing r.
/// Throws NotMajorized when a target column is outside its declared noise set.
NoiselessSimulation simulate_noisy_by_noiseless(const NoiseSpec &spec, const ClassicalProtocol &target, int d);

/// A = sum_i p_i B(i) with row i of B(i) zero; each B(i) is returned as a
/// protocol on the other k - 1 outputs. Defaults p_i proportional to
/// 1 - max_j a_ij. Throws PreconditionViolated or TransportInfeasible.
SimulationResult reduce_rows(const TransitionMatrix &a, std::optional<std::vector<double>> p = std::nullopt);

/// Bracket weights over multisets of effects; parallel over multisets.
MultisetDistribution bracket_distribution(const BallModel &model, std::uint64_t cap = kDefaultEnumerationCap);
MultisetDistribution bracket_distribution_serial(const BallModel &model, std::uint64_t cap = kDefaultEnumerationCap);

/// Ascending prefix-sum test against the max-subset distribution; nullopt on
/// pass, otherwise the largest failing r (1-based).
std::optional<BinomialWitness> binomial_test(std::span<const double> mu, int d, double tol = 1e-9);

}  // namespace chansim
