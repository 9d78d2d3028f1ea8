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

#include <stdexcept>
#include <string>
#include <string_view>

namespace chansim {

enum class ErrorCode {
    DimensionMismatch,
    LengthMismatch,
    NotHermitian,
    NotPsd,
    SumNotIdentity,
    TraceNotOne,
    InvalidPovm,
    InvalidDensity,
    NonRealResult,
    EnumerationCapExceeded,
    NegativeWeight,
    MassDrift,
    UnbalancedInstance,
    ZeroSupplyNode,
    NotMajorized,
    NotDoublyStochastic,
    BadRange,
    BadDelta,
    NumericalBreakdown,
    NotStochastic,
    WeightSumNotOne,
    NotPartitionOfUnity,
    InvalidEffect,
    InvalidState,
    OddNormIndex,
    TransportInfeasible,
    LpInfeasible,
    PreconditionViolated,
    EmptyInput,
    NotFullDimensional,
    InvalidPolytope,
    InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a machine-readable error object.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace chansim
