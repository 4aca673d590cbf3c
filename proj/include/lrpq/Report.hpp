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
 * @file Report.hpp
 * CSV/JSON emission and parsing for experiment reports, plus provenance
 * helpers.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lrpq/Experiments.hpp"

namespace lrpq {

/// Flat table; `comments` are emitted as leading "# " lines.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a header column; throws IndexError if absent.
    [[nodiscard]] std::size_t column(std::string_view name) const;
    [[nodiscard]] double number(std::size_t row, std::string_view name) const;
};

/// Shortest round-trip decimal representation.
std::string formatNumber(double value);

/// CSV text: comment lines, then the body (header and rows).
std::string toCsvString(const CsvTable &table);
/// Everything after the comment lines.
std::string csvBody(const CsvTable &table);
CsvTable parseCsv(std::string_view text);

void writeCsv(const std::filesystem::path &path, const CsvTable &table);
CsvTable readCsv(const std::filesystem::path &path);

void writeJson(const std::filesystem::path &path, const nlohmann::json &doc);
nlohmann::json readJson(const std::filesystem::path &path);

/// SHA-1 of "blob <size>\0<content>", hex encoded (same as git hash-object).
std::string gitBlobHash(std::string_view content);

/// UTC time as YYYYMMDDTHHMMSSZ.
std::string utcTimestamp();

/// <dir>/<experiment>_<timestamp>_<seed>.<ext>
std::filesystem::path reportPath(const std::filesystem::path &dir,
                                 std::string_view experiment,
                                 std::string_view timestamp,
                                 std::uint64_t seed, std::string_view ext);

/// Provenance block: config echo, its content hash, clamp eps, timestamp.
nlohmann::json provenance(const nlohmann::json &config, double clamp_eps,
                          std::string_view timestamp);

nlohmann::json toJson(const VarianceScanReport &report);
CsvTable toCsv(const VarianceScanReport &report);

nlohmann::json toJson(const LandscapeReport &report);
CsvTable toCsv(const LandscapeReport &report);

nlohmann::json toJson(const RegressionReport &report);
/// Columns: epoch, member, loss.
CsvTable lossCsv(const EnsembleResult &ensemble);
/// Columns: x, output, mean, std, member_0 .. member_{K-1}.
CsvTable predictionCsv(const RegressionReport &report);

nlohmann::json toJson(const UqReport &report);
CsvTable toCsv(const UqReport &report);

nlohmann::json toJson(const ShotNoiseReport &report);
CsvTable toCsv(const ShotNoiseReport &report);

} // namespace lrpq
