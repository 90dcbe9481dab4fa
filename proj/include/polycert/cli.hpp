/*
 *   Copyright 2026 The polycert authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycert::cli {

inline constexpr const char* kToolVersion = "polycert 0.1.0";

/// Exit-code contract, fixed for scripting:
///   0 success / holds on samples / certificate accepted
///   1 counterexample found / certificate rejected
///   2 usage, parse, precondition or deserialization error
///   3 search caps exhausted (inconclusive)
///   4 invalid certificate (structural violation)
enum ExitCode : int {
    exit_ok = 0,
    exit_disproved = 1,
    exit_usage = 2,
    exit_inconclusive = 3,
    exit_invalid_certificate = 4,
};

/// Runs one invocation: args exclude the program name, e.g.
/// {"check", "--x", "1+X1", "--y", "X1"}. All human-readable output goes to
/// `out`, diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycert::cli
