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
#include <exception>
#include <vector>

namespace chansim::detail {

/// Runs fn(i) for i in [0, count), across OpenMP threads when parallel is
/// set. The first exception (by index) is rethrown after the loop.
template <class Fn>
void for_each_index(size_t count, bool parallel, Fn &&fn) {
    std::vector<std::exception_ptr> failures(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            fn(static_cast<size_t>(i));
        } catch (...) {
            failures[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
}

}  // namespace chansim::detail
