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
#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>

#include "lrpq/Error.hpp"
#include "lrpq/Report.hpp"

using namespace lrpq;

namespace {

std::filesystem::path scratchDir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("lrpq_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("Numbers print in shortest round-trip form", "[report]") {
    CHECK(formatNumber(0.5) == "0.5");
    CHECK(formatNumber(3.0) == "3");
    for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 6.02214076e23}) {
        CHECK(std::stod(formatNumber(v)) == v);
    }
}

TEST_CASE("CSV tables round-trip with comments", "[report]") {
    CsvTable t;
    t.comments = {"experiment: demo", "config: {\"a\":1}"};
    t.header = {"x", "y"};
    t.rows = {{"0", "1.5"}, {"0.25", "-2"}};
    const auto text = toCsvString(t);
    CHECK(text.rfind("# experiment: demo\n# config: {\"a\":1}\nx,y\n", 0) == 0);
    CHECK(csvBody(t) == "x,y\n0,1.5\n0.25,-2\n");

    const auto back = parseCsv(text);
    CHECK(back.comments == t.comments);
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(back.number(1, "y") == -2.0);
    CHECK_THROWS_AS(back.column("z"), IndexError);

    const auto dir = scratchDir("csv");
    writeCsv(dir / "t.csv", t);
    CHECK(csvBody(readCsv(dir / "t.csv")) == csvBody(t));
}

TEST_CASE("JSON files round-trip and bad JSON is a config error",
          "[report]") {
    const auto dir = scratchDir("json");
    const nlohmann::json doc{{"a", 1}, {"b", {1.5, 2.5}}};
    writeJson(dir / "d.json", doc);
    CHECK(readJson(dir / "d.json") == doc);

    std::ofstream(dir / "bad.json") << "{ not json";
    CHECK_THROWS_AS(readJson(dir / "bad.json"), ConfigError);
    CHECK_THROWS_AS(readJson(dir / "missing.json"), ConfigError);
}

TEST_CASE("Content hashes match git's blob hash", "[report]") {
    CHECK(gitBlobHash("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
    CHECK(gitBlobHash("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST_CASE("Timestamps, paths and provenance", "[report]") {
    const auto ts = utcTimestamp();
    CHECK(std::regex_match(ts, std::regex(R"(\d{8}T\d{6}Z)")));
    CHECK(reportPath("out", "uq", "20260101T000000Z", 7, "csv") ==
          std::filesystem::path("out/uq_20260101T000000Z_7.csv"));

    const nlohmann::json cfg{{"seed", 3}};
    const auto p = provenance(cfg, 1e-12, ts);
    CHECK(p.at("config") == cfg);
    CHECK(p.at("input_hash") == gitBlobHash(cfg.dump()));
    CHECK(p.at("clamp_eps") == 1e-12);
    CHECK(p.at("timestamp") == ts);
    CHECK(p.contains("basis_order"));
}
