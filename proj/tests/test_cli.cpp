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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lrpq/Cli.hpp"
#include "lrpq/Error.hpp"
#include "lrpq/Report.hpp"

using namespace lrpq;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run runCli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratchDir(const std::string &name) {
    auto dir = fs::temp_directory_path() / ("lrpq_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path onlyFile(const fs::path &dir, const std::string &prefix,
                  const std::string &ext) {
    fs::path found;
    for (const auto &e : fs::directory_iterator(dir)) {
        const auto name = e.path().filename().string();
        if (name.rfind(prefix + "_", 0) == 0 && e.path().extension() == ext) {
            REQUIRE(found.empty());
            found = e.path();
        }
    }
    REQUIRE_FALSE(found.empty());
    return found;
}

} // namespace

TEST_CASE("Integer lists accept ranges and comma lists", "[cli]") {
    CHECK(cli::parseIntList("2:16:2") ==
          std::vector<std::uint64_t>{2, 4, 6, 8, 10, 12, 14, 16});
    CHECK(cli::parseIntList("1000,10000") ==
          std::vector<std::uint64_t>{1000, 10000});
    CHECK(cli::parseIntList("5") == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(cli::parseIntList("2:16"), ConfigError);
    CHECK_THROWS_AS(cli::parseIntList("4:2:1"), ConfigError);
    CHECK_THROWS_AS(cli::parseIntList("1,x"), ConfigError);
    CHECK_THROWS_AS(cli::parseIntList("-3"), ConfigError);
}

TEST_CASE("Verify subcommand passes", "[cli]") {
    const auto r = runCli({"verify"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("Usage errors exit with the configuration code", "[cli]") {
    CHECK(runCli({}).code == cli::kExitConfig);
    CHECK(runCli({"teleport"}).code == cli::kExitConfig);
    CHECK(runCli({"regression", "--bogus", "1"}).code == cli::kExitConfig);
    CHECK(runCli({"regression", "--epochs", "ten"}).code == cli::kExitConfig);
    CHECK(runCli({"regression", "--head", "pauli", "--outputs", "3",
                  "--out", scratchDir("usage").string()})
              .code == cli::kExitConfig);
    CHECK(runCli({"landscape", "--resolution", "4"}).code == cli::kExitConfig);
    const auto help = runCli({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("variance-scan") != std::string::npos);
}

TEST_CASE("Config file values sit between defaults and flags", "[cli]") {
    const auto dir = scratchDir("precedence");
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"qubits": "2", "shots": [100, 1000],
                              "repeats": 50, "seed": 4})";

    const auto a = runCli({"shot-noise", "--config", cfg.string(), "--out",
                           (dir / "a").string()});
    REQUIRE(a.code == cli::kExitOk);
    const auto ja = readJson(onlyFile(dir / "a", "shot-noise", ".json"));
    const auto &ca = ja.at("provenance").at("config");
    CHECK(ca.at("repeats") == 50);
    CHECK(ca.at("seed") == 4);
    CHECK(ca.at("qubits") == nlohmann::json::array({2}));

    const auto b = runCli({"shot-noise", "--config", cfg.string(), "--repeats",
                           "60", "--seed", "9", "--out",
                           (dir / "b").string()});
    REQUIRE(b.code == cli::kExitOk);
    const auto cb = readJson(onlyFile(dir / "b", "shot-noise", ".json"))
                        .at("provenance")
                        .at("config");
    CHECK(cb.at("repeats") == 60);
    CHECK(cb.at("seed") == 9);
    CHECK(onlyFile(dir / "b", "shot-noise", ".csv").filename().string().ends_with(
        "_9.csv"));
}

TEST_CASE("Config files are checked strictly", "[cli]") {
    const auto dir = scratchDir("strict");
    std::ofstream(dir / "unknown.json") << R"({"repeats": 5, "colour": 1})";
    std::ofstream(dir / "type.json") << R"({"repeats": "many"})";
    std::ofstream(dir / "other.json") << R"({"experiment": "uq"})";
    std::ofstream(dir / "broken.json") << "{";
    for (const char *name :
         {"unknown.json", "type.json", "other.json", "broken.json"}) {
        INFO(name);
        const auto r = runCli({"shot-noise", "--config",
                               (dir / name).string(), "--out",
                               dir.string()});
        CHECK(r.code == cli::kExitConfig);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("Output directory falls back to the environment", "[cli]") {
    const auto dir = scratchDir("env");
    ::setenv("LRPQ_OUT", dir.string().c_str(), 1);
    const auto r =
        runCli({"shot-noise", "--qubits", "2", "--shots", "100", "--repeats",
                "10"});
    ::unsetenv("LRPQ_OUT");
    REQUIRE(r.code == cli::kExitOk);
    const auto csv = readCsv(onlyFile(dir, "shot-noise", ".csv"));
    REQUIRE_FALSE(csv.comments.empty());
    CHECK(csv.comments[1].rfind("config: {", 0) == 0);
}

TEST_CASE("Reruns give byte-identical CSV bodies", "[cli][determinism]") {
    const auto dir = scratchDir("rerun");
    const std::vector<std::vector<std::string>> commands{
        {"shot-noise", "--qubits", "2,3", "--shots", "100,1000", "--repeats",
         "30"},
        {"variance-scan", "--n-qubits", "3", "--depths", "1:3:1",
         "--n-seeds", "2", "--n-ensembles", "8"},
        {"landscape", "--resolution", "5", "--warmup-epochs", "3"},
        {"regression", "--epochs", "3", "--ensemble", "2", "--n-points",
         "20", "--grid-points", "10"},
        {"uq", "--epochs", "3", "--ensemble", "2", "--grid-points", "10"}};
    for (const auto &cmd : commands) {
        const std::string exp = cmd[0];
        INFO(exp);
        std::vector<std::string> bodies;
        for (const char *sub : {"first", "second"}) {
            auto args = cmd;
            args.insert(args.end(), {"--seed", "3", "--jobs", "2", "--out",
                                     (dir / exp / sub).string()});
            REQUIRE(runCli(args).code == cli::kExitOk);
            std::vector<fs::path> csvs;
            for (const auto &e : fs::directory_iterator(dir / exp / sub)) {
                if (e.path().extension() == ".csv") {
                    csvs.push_back(e.path());
                }
            }
            std::sort(csvs.begin(), csvs.end());
            std::string all;
            for (const auto &path : csvs) {
                all += csvBody(readCsv(path));
            }
            REQUIRE_FALSE(all.empty());
            bodies.push_back(all);
        }
        CHECK(bodies[0] == bodies[1]);
    }
}
