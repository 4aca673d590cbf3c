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
#include "lrpq/Report.hpp"

#include <charconv>
#include <concepts>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "lrpq/Error.hpp"

namespace lrpq {

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw IndexError("no CSV column named '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::string_view name) const {
    const std::string &cell = rows.at(row).at(column(name));
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(cell.data(), cell.data() + cell.size(), value);
    require<InputError>(ec == std::errc{} && ptr == cell.data() + cell.size(),
                        "CSV cell '" + cell + "' is not a number");
    return value;
}

std::string formatNumber(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    require<NumericError>(ec == std::errc{}, "failed to format number");
    return {buf, ptr};
}

namespace {

void appendRow(std::string &out, const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        require<InputError>(cells[i].find_first_of(",\n\r") ==
                                std::string::npos,
                            "CSV cell contains a separator: " + cells[i]);
        if (i > 0) {
            out += ',';
        }
        out += cells[i];
    }
    out += '\n';
}

std::vector<std::string> splitRow(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

std::string readText(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    require<ConfigError>(static_cast<bool>(in),
                         "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeText(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    require<ConfigError>(static_cast<bool>(out),
                         "cannot write " + path.string());
    out << text;
}

} // namespace

std::string csvBody(const CsvTable &table) {
    std::string out;
    appendRow(out, table.header);
    for (const auto &row : table.rows) {
        require<InputError>(row.size() == table.header.size(),
                            "CSV row width differs from header");
        appendRow(out, row);
    }
    return out;
}

std::string toCsvString(const CsvTable &table) {
    std::string out;
    for (const auto &c : table.comments) {
        require<InputError>(c.find('\n') == std::string::npos,
                            "CSV comment spans lines");
        out += "# " + c + '\n';
    }
    return out + csvBody(table);
}

CsvTable parseCsv(std::string_view text) {
    CsvTable table;
    bool have_header = false;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!have_header && line.starts_with("# ")) {
            table.comments.emplace_back(line.substr(2));
            continue;
        }
        auto cells = splitRow(line);
        if (!have_header) {
            table.header = std::move(cells);
            have_header = true;
        } else {
            require<InputError>(cells.size() == table.header.size(),
                                "CSV row width differs from header");
            table.rows.push_back(std::move(cells));
        }
    }
    require<InputError>(have_header, "CSV has no header");
    return table;
}

void writeCsv(const std::filesystem::path &path, const CsvTable &table) {
    writeText(path, toCsvString(table));
}

CsvTable readCsv(const std::filesystem::path &path) {
    return parseCsv(readText(path));
}

void writeJson(const std::filesystem::path &path, const nlohmann::json &doc) {
    writeText(path, doc.dump(2) + '\n');
}

nlohmann::json readJson(const std::filesystem::path &path) {
    try {
        return nlohmann::json::parse(readText(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " +
                          e.what());
    }
}

std::string gitBlobHash(std::string_view content) {
    const std::string header = "blob " + std::to_string(content.size());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX *ctx = EVP_MD_CTX_new();
    require<Error>(ctx != nullptr, "cannot allocate digest context");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, header.data(), header.size() + 1) ==
                        1 &&
                    EVP_DigestUpdate(ctx, content.data(), content.size()) ==
                        1 &&
                    EVP_DigestFinal_ex(ctx, digest, &len) == 1;
    EVP_MD_CTX_free(ctx);
    require<Error>(ok, "SHA-1 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0')
            << static_cast<int>(digest[i]);
    }
    return hex.str();
}

std::string utcTimestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

std::filesystem::path reportPath(const std::filesystem::path &dir,
                                 std::string_view experiment,
                                 std::string_view timestamp,
                                 std::uint64_t seed, std::string_view ext) {
    return dir / (std::string(experiment) + "_" + std::string(timestamp) +
                  "_" + std::to_string(seed) + "." + std::string(ext));
}

nlohmann::json provenance(const nlohmann::json &config, double clamp_eps,
                          std::string_view timestamp) {
    return {{"config", config},
            {"input_hash", gitBlobHash(config.dump())},
            {"clamp_eps", clamp_eps},
            {"basis_order", "qubit 0 is the most significant bit"},
            {"timestamp", std::string(timestamp)}};
}

// ---------------------------------------------------------------------------

namespace {

std::string num(double v) { return formatNumber(v); }
template <std::integral T> std::string num(T v) { return std::to_string(v); }

} // namespace

nlohmann::json toJson(const VarianceScanReport &report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto &c : report.cells) {
        cells.push_back({{"depth", c.depth},
                         {"seed", c.seed},
                         {"n_samples", c.num_samples},
                         {"mean_gradient", c.mean},
                         {"variance", c.variance}});
    }
    return {{"experiment", "variance-scan"},
            {"config", report.config},
            {"gradient_component", "d loss / d theta[param_index]"},
            {"cells", cells}};
}

CsvTable toCsv(const VarianceScanReport &report) {
    CsvTable t;
    t.header = {"head", "n_qubits", "depth", "seed",
                "n_samples", "mean_gradient", "variance"};
    for (const auto &c : report.cells) {
        t.rows.push_back({toString(report.config.head),
                          num(report.config.num_qubits), num(c.depth),
                          num(c.seed), num(c.num_samples), num(c.mean),
                          num(c.variance)});
    }
    return t;
}

nlohmann::json toJson(const LandscapeReport &report) {
    return {{"experiment", "landscape"},
            {"config", report.config},
            {"reference_params", report.reference},
            {"reference_loss", report.reference_loss},
            {"direction_1", report.directions.first},
            {"direction_2", report.directions.second},
            {"eigenvalue_1", report.directions.first_eigenvalue},
            {"eigenvalue_2", report.directions.second_eigenvalue},
            {"degenerate", report.directions.degenerate},
            {"coords", report.coords},
            {"surface", report.surface}};
}

CsvTable toCsv(const LandscapeReport &report) {
    CsvTable t;
    t.header = {"alpha", "beta", "loss"};
    const std::size_t n = report.coords.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.rows.push_back({num(report.coords[a]), num(report.coords[b]),
                              num(report.at(a, b))});
        }
    }
    return t;
}

namespace {

nlohmann::json datasetJson(const Dataset &ds) {
    return {{"metadata", ds.metadata},
            {"inputs", ds.inputs},
            {"targets", ds.targets}};
}

} // namespace

nlohmann::json toJson(const RegressionReport &report) {
    return {{"experiment", "regression"},
            {"config", report.config},
            {"dataset", datasetJson(report.dataset)},
            {"ensemble", report.ensemble},
            {"final_mse", report.final_mse},
            {"mean_final_mse", report.meanFinalMse()},
            {"grid", report.grid},
            {"prediction_mean", report.mean},
            {"prediction_std", report.stddev}};
}

CsvTable lossCsv(const EnsembleResult &ensemble) {
    CsvTable t;
    t.header = {"epoch", "member", "loss"};
    for (std::size_t m = 0; m < ensemble.members.size(); ++m) {
        const auto &hist = ensemble.members[m].loss_history;
        for (std::size_t e = 0; e < hist.size(); ++e) {
            t.rows.push_back({num(e + 1), num(m), num(hist[e])});
        }
    }
    return t;
}

CsvTable predictionCsv(const RegressionReport &report) {
    CsvTable t;
    t.header = {"x", "output", "mean", "std"};
    const std::size_t k = report.predictions.size();
    for (std::size_t m = 0; m < k; ++m) {
        t.header.push_back("member_" + std::to_string(m));
    }
    for (std::size_t g = 0; g < report.grid.size(); ++g) {
        for (std::size_t o = 0; o < report.config.num_outputs; ++o) {
            std::vector<std::string> row{num(report.grid[g]), num(o),
                                         num(report.mean[g][o]),
                                         num(report.stddev[g][o])};
            for (std::size_t m = 0; m < k; ++m) {
                row.push_back(num(report.predictions[m][g][o]));
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

nlohmann::json toJson(const UqReport &report) {
    nlohmann::json decomposition = nlohmann::json::array();
    for (const auto &p : report.decomposition) {
        decomposition.push_back({{"x", p.x},
                                 {"mean", p.mean},
                                 {"aleatoric", p.aleatoric},
                                 {"epistemic", p.epistemic},
                                 {"total", p.total}});
    }
    std::vector<bool> excluded(report.excluded.begin(), report.excluded.end());
    return {{"experiment", "uq"},
            {"config", report.config},
            {"dataset", datasetJson(report.dataset)},
            {"ensemble", report.ensemble},
            {"excluded_members", excluded},
            {"warnings", report.warnings},
            {"grid", report.grid},
            {"member_mu", report.mu},
            {"member_variance", report.variance},
            {"decomposition", decomposition}};
}

CsvTable toCsv(const UqReport &report) {
    CsvTable t;
    t.header = {"x",     "mean",   "aleatoric", "epistemic",
                "total", "in_gap", "in_noisy",  "in_quiet"};
    const auto &d = report.config.data;
    for (const auto &p : report.decomposition) {
        t.rows.push_back({num(p.x), num(p.mean), num(p.aleatoric),
                          num(p.epistemic), num(p.total),
                          d.gap.contains(p.x) ? "1" : "0",
                          d.noisy.contains(p.x) ? "1" : "0",
                          d.quiet.contains(p.x) ? "1" : "0"});
    }
    return t;
}

nlohmann::json toJson(const ShotNoiseReport &report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto &c : report.cells) {
        cells.push_back({{"n_qubits", c.num_qubits},
                         {"shots", c.shots},
                         {"output", c.output_index},
                         {"empirical_variance", c.empirical_variance},
                         {"predicted_variance", c.predicted_variance},
                         {"under_sampled", c.under_sampled}});
    }
    return {{"experiment", "shot-noise"},
            {"config", report.config},
            {"cells", cells}};
}

CsvTable toCsv(const ShotNoiseReport &report) {
    CsvTable t;
    t.header = {"n_qubits",           "shots", "output", "empirical_variance",
                "predicted_variance", "ratio", "under_sampled"};
    for (const auto &c : report.cells) {
        t.rows.push_back({num(c.num_qubits), num(c.shots),
                          num(c.output_index), num(c.empirical_variance),
                          num(c.predicted_variance),
                          num(c.empirical_variance / c.predicted_variance),
                          c.under_sampled ? "1" : "0"});
    }
    return t;
}

} // namespace lrpq
