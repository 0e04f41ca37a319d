// Copyright 2026 The Majorant Authors
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

namespace majorant::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,            // also "Inconclusive" for detect
    kDetected = 1,      // detect: Entangled; oracle: estimate exceeds the bound
    kError = 2,         // parse, validation or usage error
};

/// Runs one invocation. `args` excludes the program name. An empty
/// `dim_limit_env` leaves the default enumeration guard in place.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& dim_limit_env = {});

}  // namespace majorant::cli
