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
 * @file Cli.hpp
 * Command-line front end: subcommand dispatch, layered configuration and
 * report emission.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace lrpq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/**
 * @brief Fully-resolved configuration of one invocation.
 *
 * `settings` holds every experiment key after applying defaults, then the
 * config file, then command-line flags.
 */
struct RunConfig {
    std::string experiment;
    nlohmann::json settings;
    std::filesystem::path output_dir;
    std::uint64_t seed{0};
    std::size_t jobs{0};
};

/// Parse `start:stop:step` (inclusive stop) or a comma list of integers.
std::vector<std::uint64_t> parseIntList(const std::string &text);

/// Entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace lrpq::cli
