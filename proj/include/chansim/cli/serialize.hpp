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

#include <string>
#include <string_view>
#include <vector>

#include "chansim/certify.hpp"
#include "chansim/channels.hpp"
#include "chansim/linalg.hpp"
#include "chansim/matrix.hpp"
#include "json.hpp"

namespace chansim::io {

using Json = nlohmann::json;

/// Sorted keys, no whitespace, integers verbatim, floats with 17 significant
/// digits. Throws InvalidInput on non-finite numbers.
std::string canonical_dump(const Json &value);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

Json to_json(const Matrix &m);
Json to_json(const ComplexMatrix &m);
Json to_json(const Povm &p);
Json to_json(const ClassicalProtocol &p);
Json to_json(const NoiseSpec &spec);
Json to_json(const ClassicalMixture &m);
Json to_json(const BallModel &model);
Json to_json(const WitnessReport &rep);
Json to_json(const Polytope &p);

/// Parsers throw Error(InvalidInput) on malformed documents.
Matrix matrix_from_json(const Json &j);
TransitionMatrix transition_from_json(const Json &j, double tol = 1e-9);
/// Entries may be plain numbers or [re, im] pairs.
ComplexMatrix complex_from_json(const Json &j);
Povm povm_from_json(const Json &j);
std::vector<DensityMatrix> states_from_json(const Json &j);
ClassicalProtocol protocol_from_json(const Json &j);
NoiseSpec noise_from_json(const Json &j);
ClassicalMixture mixture_from_json(const Json &j);
BallModel ball_from_json(const Json &j);
Polytope polytope_from_json(const Json &j);
std::vector<double> vector_from_json(const Json &j);

/// "none", "delta:<rational or decimal>" or "perm:a,b,c".
NoiseSpec parse_noise_flag(const std::string &text);

}  // namespace chansim::io
