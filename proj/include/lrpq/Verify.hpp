// Copyright 2026 The LRPQ Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file Verify.hpp
 * Fast invariant and oracle sweep backing the `verify` subcommand.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrpq {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Run every check; never throws for a failing check.
std::vector<CheckResult> runVerification(std::uint64_t seed = 0);

/// Relative/absolute agreement used for gradient-oracle comparisons.
bool gradientsAgree(double analytic, double numeric, double rel_tol = 1e-6,
                    double abs_tol = 1e-8);

} // namespace lrpq
