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

#include <iosfwd>
#include <string>
#include <vector>

namespace chansim::cli {

inline constexpr const char *kCertificateVersion = "chansim-cert/1";

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitNegative = 2,
};

/// Runs one command. args excludes the program name. Certificates go to out
/// unless --out is given; diagnostics go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, char **argv);

}  // namespace chansim::cli
