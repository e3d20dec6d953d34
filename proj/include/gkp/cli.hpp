// Copyright 2026 The gkp-magic Authors
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

namespace gkp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs the `gkp` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "4,6,8" or the inclusive range "4:18:2". Throws
/// std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string& text);

/// Trailing zeros removed, at least one digit kept after the point.
std::string format_fixed(double value, int digits);

}  // namespace gkp::cli
