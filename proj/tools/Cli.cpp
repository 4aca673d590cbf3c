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
#include "lrpq/Cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "lrpq/Error.hpp"
#include "lrpq/Experiments.hpp"
#include "lrpq/Report.hpp"
#include "lrpq/Verify.hpp"

namespace lrpq::cli {

namespace {

using nlohmann::json;

enum class Kind { Uint, Double, String, UintList, DoubleList };

struct KeySpec {
    std::string name;
    Kind kind;
    json fallback;
    std::string help;
};

std::vector<KeySpec> circuitKeys(std::size_t qubits, std::size_t layers) {
    return {{"n_qubits", Kind::Uint, qubits, "number of qubits"},
            {"n_layers", Kind::Uint, layers, "number of circuit layers"},
            {"entangler", Kind::String, "chain", "chain | ring"}};
}

std::vector<KeySpec> trainKeys(std::size_t epochs) {
    return {{"epochs", Kind::Uint, epochs, "training epochs"},
            {"learning_rate", Kind::Double, 0.1, "Adam learning rate"},
            {"batch_size", Kind::Uint, 64, "mini-batch size"}};
}

const std::map<std::string, std::vector<KeySpec>> &keyTables() {
    static const std::map<std::string, std::vector<KeySpec>> tables = [] {
        std::map<std::string, std::vector<KeySpec>> t;
        const double pi = std::numbers::pi;
        const KeySpec eps{"clamp_eps", Kind::Double, kDefaultClampEps,
                          "probability clamp for log-ratios"};

        t["variance-scan"] = {
            {"n_qubits", Kind::Uint, 4, "number of qubits"},
            {"depths", Kind::UintList, json::array({2, 4, 6, 8, 10, 12, 14, 16}),
             "depth list, start:stop:step or comma list"},
            {"n_seeds", Kind::Uint, 5, "number of seeds"},
            {"n_ensembles", Kind::Uint, 100, "random draws per (depth, seed)"},
            {"head", Kind::String, "pauli", "pauli | lrp"},
            {"entangler", Kind::String, "chain", "chain | ring"},
            {"probe_x", Kind::Double, 0.5, "probe input"},
            {"param_index", Kind::Uint, 0, "differentiated flat parameter"},
            eps};

        t["landscape"] = circuitKeys(2, 4);
        t["landscape"].insert(
            t["landscape"].end(),
            {{"head", Kind::String, "pauli", "pauli | lrp"},
             {"half_width", Kind::Double, pi, "grid half width (radians)"},
             {"resolution", Kind::Uint, 51, "grid points per axis (odd)"},
             {"probe_x", Kind::Double, 0.5, "probe input"},
             {"warmup_epochs", Kind::Uint, 20, "warm-up epochs"},
             {"hessian_step", Kind::Double, kDefaultHessianStep,
              "finite-difference step"},
             eps});

        t["regression"] = circuitKeys(2, 3);
        auto train = trainKeys(100);
        t["regression"].insert(t["regression"].end(), train.begin(),
                               train.end());
        t["regression"].insert(
            t["regression"].end(),
            {{"head", Kind::String, "lrp", "pauli | lrp"},
             {"outputs", Kind::Uint, 3, "number of regression targets"},
             {"n_points", Kind::Uint, 100, "training samples"},
             {"x_min", Kind::Double, 0.0, "input range start"},
             {"x_max", Kind::Double, 2.0 * pi, "input range end (exclusive)"},
             {"noise_sigma", Kind::Double, 0.1, "target noise std"},
             {"data_seed", Kind::Uint, 0, "dataset noise seed"},
             {"ensemble", Kind::Uint, 10, "ensemble size"},
             {"grid_points", Kind::Uint, 200, "prediction grid size"},
             eps});

        t["uq"] = circuitKeys(2, 3);
        train = trainKeys(UqConfig{}.train.epochs);
        t["uq"].insert(t["uq"].end(), train.begin(), train.end());
        const SparseSineConfig d{};
        t["uq"].insert(
            t["uq"].end(),
            {{"ensemble", Kind::Uint, 10, "ensemble size"},
             {"grid_points", Kind::Uint, 200, "evaluation grid size"},
             {"data_seed", Kind::Uint, 0, "dataset noise seed"},
             {"n_grid", Kind::Uint, d.n_grid, "sampling grid before the gap"},
             {"gap", Kind::DoubleList, json::array({d.gap.lo, d.gap.hi}),
              "data gap lo,hi"},
             {"noisy", Kind::DoubleList,
              json::array({d.noisy.lo, d.noisy.hi}), "noisy band lo,hi"},
             {"quiet", Kind::DoubleList,
              json::array({d.quiet.lo, d.quiet.hi}),
              "quiet comparison band lo,hi"},
             {"sigma_quiet", Kind::Double, d.sigma_quiet, "quiet noise std"},
             {"sigma_noisy", Kind::Double, d.sigma_noisy, "noisy-band std"},
             {"mean_index", Kind::Uint, 0, "LRP output used as mean"},
             {"log_variance_index", Kind::Uint, 1,
              "LRP output used as log-variance"},
             eps});

        t["shot-noise"] = {
            {"qubits", Kind::UintList, json::array({2, 3, 4}), "qubit counts"},
            {"shots", Kind::UintList, json::array({1000, 10000, 100000}),
             "shot counts"},
            {"repeats", Kind::Uint, 1000, "repeats per cell"},
            {"pseudo_count", Kind::Double, 0.5, "zero-count replacement"}};

        t["verify"] = {};
        return t;
    }();
    return tables;
}

std::string typeName(Kind kind) {
    switch (kind) {
    case Kind::Uint:
        return "UINT";
    case Kind::Double:
        return "FLOAT";
    case Kind::String:
        return "TEXT";
    case Kind::UintList:
        return "LIST";
    case Kind::DoubleList:
        return "LO,HI";
    }
    return "TEXT";
}

std::string dashed(std::string key) {
    for (char &c : key) {
        if (c == '_') {
            c = '-';
        }
    }
    return key;
}

json parseValue(const KeySpec &spec, const std::string &text) {
    try {
        switch (spec.kind) {
        case Kind::Uint: {
            std::size_t pos = 0;
            const auto v = std::stoull(text, &pos);
            require<ConfigError>(pos == text.size() && text[0] != '-',
                                 "not an unsigned integer");
            return v;
        }
        case Kind::Double: {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            require<ConfigError>(pos == text.size(), "not a number");
            return v;
        }
        case Kind::String:
            return text;
        case Kind::UintList:
            return parseIntList(text);
        case Kind::DoubleList: {
            json arr = json::array();
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t pos = 0;
                arr.push_back(std::stod(item, &pos));
                require<ConfigError>(pos == item.size(), "not a number");
            }
            return arr;
        }
        }
    } catch (const std::logic_error &) {
    } catch (const ConfigError &) {
    }
    throw ConfigError("invalid value '" + text + "' for --" +
                      dashed(spec.name));
}

void checkType(const KeySpec &spec, const json &value) {
    bool ok = false;
    switch (spec.kind) {
    case Kind::Uint:
        ok = value.is_number_unsigned() ||
             (value.is_number_integer() && value.get<long long>() >= 0);
        break;
    case Kind::Double:
        ok = value.is_number();
        break;
    case Kind::String:
        ok = value.is_string();
        break;
    case Kind::UintList:
        ok = value.is_string() || value.is_array();
        break;
    case Kind::DoubleList:
        ok = value.is_array() && std::all_of(value.begin(), value.end(),
                                             [](const json &v) {
                                                 return v.is_number();
                                             });
        break;
    }
    require<ConfigError>(ok, "config key '" + spec.name +
                                 "' has the wrong type");
}

json normalize(const KeySpec &spec, const json &value) {
    if (spec.kind == Kind::UintList && value.is_string()) {
        return parseIntList(value.get<std::string>());
    }
    return value;
}

template <class T> T get(const json &s, const std::string &key) {
    return s.at(key).get<T>();
}

Interval interval(const json &s, const std::string &key) {
    const auto v = get<std::vector<double>>(s, key);
    require<ConfigError>(v.size() == 2, "interval '" + key +
                                            "' needs exactly two values");
    return {v[0], v[1]};
}

CircuitSpec circuitFrom(const json &s) {
    CircuitSpec spec{get<std::size_t>(s, "n_qubits"),
                     get<std::size_t>(s, "n_layers"),
                     entanglerFromString(get<std::string>(s, "entangler"))};
    spec.validate();
    return spec;
}

TrainConfig trainFrom(const json &s, std::uint64_t seed) {
    TrainConfig cfg;
    cfg.epochs = get<std::size_t>(s, "epochs");
    cfg.learning_rate = get<double>(s, "learning_rate");
    cfg.batch_size = get<std::size_t>(s, "batch_size");
    cfg.seed = seed;
    return cfg;
}

json resolvedJson(const RunConfig &rc) {
    json j = rc.settings;
    j["experiment"] = rc.experiment;
    j["seed"] = rc.seed;
    j["output_dir"] = rc.output_dir.string();
    j["jobs"] = rc.jobs;
    return j;
}

/// Writes the JSON report and each CSV, echoing the resolved config.
class Emitter {
  public:
    Emitter(const RunConfig &rc, std::ostream &out)
        : rc_{rc}, out_{out}, timestamp_{utcTimestamp()},
          config_(resolvedJson(rc)) {}

    void json(const std::string &experiment, nlohmann::json doc,
              double clamp_eps) {
        doc["provenance"] = provenance(config_, clamp_eps, timestamp_);
        const auto path =
            reportPath(rc_.output_dir, experiment, timestamp_, rc_.seed, "json");
        writeJson(path, doc);
        out_ << "wrote " << path.string() << '\n';
    }

    void csv(const std::string &experiment, CsvTable table) {
        table.comments = {"experiment: " + experiment,
                          "config: " + config_.dump()};
        const auto path =
            reportPath(rc_.output_dir, experiment, timestamp_, rc_.seed, "csv");
        writeCsv(path, table);
        out_ << "wrote " << path.string() << '\n';
    }

  private:
    const RunConfig &rc_;
    std::ostream &out_;
    std::string timestamp_;
    nlohmann::json config_;
};

int runVarianceScan(const RunConfig &rc, std::ostream &out) {
    const auto &s = rc.settings;
    VarianceScanConfig cfg;
    cfg.num_qubits = get<std::size_t>(s, "n_qubits");
    cfg.depths = get<std::vector<std::size_t>>(s, "depths");
    cfg.num_seeds = get<std::size_t>(s, "n_seeds");
    cfg.num_ensembles = get<std::size_t>(s, "n_ensembles");
    cfg.head = headFromString(get<std::string>(s, "head"));
    cfg.entangler = entanglerFromString(get<std::string>(s, "entangler"));
    cfg.probe_x = get<double>(s, "probe_x");
    cfg.param_index = get<std::size_t>(s, "param_index");
    cfg.clamp_eps = get<double>(s, "clamp_eps");
    cfg.seed = rc.seed;
    const auto report = varianceScan(cfg, rc.jobs);

    for (std::size_t k = 0; k < cfg.num_seeds; ++k) {
        const auto vars = report.variancesForSeed(k);
        std::vector<double> depths(cfg.depths.begin(), cfg.depths.end());
        out << "seed " << cfg.seed + k << ": Var(first)="
            << formatNumber(vars.front())
            << " Var(last)=" << formatNumber(vars.back());
        if (vars.size() >= 2) {
            out << " spearman=" << formatNumber(spearman(depths, vars));
        }
        out << '\n';
    }
    Emitter emit(rc, out);
    emit.json("variance-scan", toJson(report), cfg.clamp_eps);
    emit.csv("variance-scan", toCsv(report));
    return kExitOk;
}

int runLandscape(const RunConfig &rc, std::ostream &out) {
    const auto &s = rc.settings;
    LandscapeConfig cfg;
    cfg.spec = circuitFrom(s);
    cfg.head = headFromString(get<std::string>(s, "head"));
    cfg.half_width = get<double>(s, "half_width");
    cfg.resolution = get<std::size_t>(s, "resolution");
    cfg.probe_x = get<double>(s, "probe_x");
    cfg.warmup_epochs = get<std::size_t>(s, "warmup_epochs");
    cfg.hessian_step = get<double>(s, "hessian_step");
    cfg.clamp_eps = get<double>(s, "clamp_eps");
    cfg.seed = rc.seed;
    const auto report = lossLandscape(cfg, std::nullopt, rc.jobs);
    out << "reference loss " << formatNumber(report.reference_loss)
        << ", surface max " << formatNumber(report.maxLoss())
        << (report.directions.degenerate ? " (degenerate top eigenvalues)"
                                         : "")
        << '\n';
    Emitter emit(rc, out);
    emit.json("landscape", toJson(report), cfg.clamp_eps);
    emit.csv("landscape", toCsv(report));
    return kExitOk;
}

int runRegression(const RunConfig &rc, std::ostream &out) {
    const auto &s = rc.settings;
    RegressionConfig cfg;
    cfg.spec = circuitFrom(s);
    cfg.train = trainFrom(s, rc.seed);
    cfg.head = headFromString(get<std::string>(s, "head"));
    cfg.num_outputs = get<std::size_t>(s, "outputs");
    cfg.num_points = get<std::size_t>(s, "n_points");
    cfg.x_min = get<double>(s, "x_min");
    cfg.x_max = get<double>(s, "x_max");
    cfg.noise_sigma = get<double>(s, "noise_sigma");
    cfg.data_seed = get<std::uint64_t>(s, "data_seed");
    cfg.ensemble = get<std::size_t>(s, "ensemble");
    cfg.grid_points = get<std::size_t>(s, "grid_points");
    cfg.clamp_eps = get<double>(s, "clamp_eps");
    const auto report = regressionExperiment(cfg, rc.jobs);
    out << "ensemble-mean final training MSE "
        << formatNumber(report.meanFinalMse()) << '\n';
    Emitter emit(rc, out);
    emit.json("regression", toJson(report), cfg.clamp_eps);
    emit.csv("regression-loss", lossCsv(report.ensemble));
    emit.csv("regression-predictions", predictionCsv(report));
    return kExitOk;
}

int runUq(const RunConfig &rc, std::ostream &out) {
    const auto &s = rc.settings;
    UqConfig cfg;
    cfg.spec = circuitFrom(s);
    cfg.train = trainFrom(s, rc.seed);
    cfg.ensemble = get<std::size_t>(s, "ensemble");
    cfg.grid_points = get<std::size_t>(s, "grid_points");
    cfg.data_seed = get<std::uint64_t>(s, "data_seed");
    cfg.data.n_grid = get<std::size_t>(s, "n_grid");
    cfg.data.gap = interval(s, "gap");
    cfg.data.noisy = interval(s, "noisy");
    cfg.data.quiet = interval(s, "quiet");
    cfg.data.sigma_quiet = get<double>(s, "sigma_quiet");
    cfg.data.sigma_noisy = get<double>(s, "sigma_noisy");
    cfg.indices = {get<std::size_t>(s, "mean_index"),
                   get<std::size_t>(s, "log_variance_index")};
    cfg.clamp_eps = get<double>(s, "clamp_eps");
    const auto report = uqExperiment(cfg, rc.jobs);
    for (const auto &w : report.warnings) {
        out << "warning: " << w << '\n';
    }
    const auto &d = cfg.data;
    out << "epistemic gap/quiet "
        << formatNumber(report.meanOver(d.gap, &UncertaintyPoint::epistemic) /
                        report.meanOver(d.quiet, &UncertaintyPoint::epistemic))
        << ", aleatoric noisy/quiet "
        << formatNumber(
               report.meanOver(d.noisy, &UncertaintyPoint::aleatoric) /
               report.meanOver(d.quiet, &UncertaintyPoint::aleatoric))
        << '\n';
    Emitter emit(rc, out);
    emit.json("uq", toJson(report), cfg.clamp_eps);
    emit.csv("uq", toCsv(report));
    return kExitOk;
}

int runShotNoise(const RunConfig &rc, std::ostream &out) {
    const auto &s = rc.settings;
    ShotNoiseConfig cfg;
    cfg.qubits = get<std::vector<std::size_t>>(s, "qubits");
    cfg.shots = get<std::vector<std::uint64_t>>(s, "shots");
    cfg.repeats = get<std::size_t>(s, "repeats");
    cfg.pseudo_count = get<double>(s, "pseudo_count");
    cfg.seed = rc.seed;
    const auto report = shotNoiseScan(cfg, rc.jobs);
    for (const auto &c : report.cells) {
        if (c.output_index == 0) {
            out << "n=" << c.num_qubits << " N=" << c.shots
                << " Var[y0]=" << formatNumber(c.empirical_variance)
                << " ratio="
                << formatNumber(c.empirical_variance / c.predicted_variance)
                << (c.under_sampled ? " (under-sampled)" : "") << '\n';
        }
    }
    Emitter emit(rc, out);
    emit.json("shot-noise", toJson(report), 0.0);
    emit.csv("shot-noise", toCsv(report));
    return kExitOk;
}

int runVerify(const RunConfig &rc, std::ostream &out) {
    const auto results = runVerification(rc.seed);
    bool all = true;
    for (const auto &r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
            << r.detail << '\n';
        all = all && r.passed;
    }
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all ? kExitOk : kExitNumeric;
}

std::filesystem::path defaultOutputDir() {
    if (const char *env = std::getenv("LRPQ_OUT"); env && *env) {
        return env;
    }
    return "results";
}

} // namespace

std::vector<std::uint64_t> parseIntList(const std::string &text) {
    const auto parseOne = [&](const std::string &item) {
        std::size_t pos = 0;
        require<ConfigError>(!item.empty() && item[0] != '-',
                             "invalid integer list '" + text + "'");
        std::uint64_t v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::logic_error &) {
            pos = 0;
        }
        require<ConfigError>(pos == item.size() && pos > 0,
                             "invalid integer list '" + text + "'");
        return v;
    };
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    if (text.find(':') != std::string::npos) {
        while (std::getline(ss, item, ':')) {
            parts.push_back(item);
        }
        require<ConfigError>(parts.size() == 3,
                             "range must be start:stop:step");
        const auto start = parseOne(parts[0]);
        const auto stop = parseOne(parts[1]);
        const auto step = parseOne(parts[2]);
        require<ConfigError>(step > 0 && start <= stop,
                             "range needs step > 0 and start <= stop");
        std::vector<std::uint64_t> out;
        for (auto v = start; v <= stop; v += step) {
            out.push_back(v);
        }
        return out;
    }
    std::vector<std::uint64_t> out;
    while (std::getline(ss, item, ',')) {
        out.push_back(parseOne(item));
    }
    require<ConfigError>(!out.empty(), "empty integer list");
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"lrpq: parameterized quantum circuit regression with "
                 "log-ratio probability outputs"};
    app.name("lrpq");
    app.footer(
        "Configuration precedence: built-in defaults < --config JSON file < "
        "command-line flags.\nThe config file is a single JSON object whose "
        "keys are the flag names with '_' for '-' (plus seed, output_dir, "
        "jobs, experiment); unknown keys are rejected.\nLRPQ_OUT sets the "
        "default output directory.\nExit codes: 0 success, 2 configuration "
        "error, 3 numeric failure.");
    app.require_subcommand(1, 1);

    struct SubState {
        CLI::App *app;
        std::map<std::string, std::string> values;
        std::uint64_t seed{0};
        std::string out_dir;
        std::size_t jobs{0};
        std::string config;
    };
    std::map<std::string, SubState> subs;
    const std::map<std::string, std::string> descriptions{
        {"landscape", "loss surface on the top-two Hessian eigenvector plane"},
        {"variance-scan", "gradient variance versus circuit depth"},
        {"regression", "multi-output trigonometric regression ensemble"},
        {"uq", "deep-ensemble uncertainty decomposition on a sparse, noisy "
               "sine"},
        {"shot-noise", "sampled log-ratio variance versus shot count"},
        {"verify", "invariant and gradient-oracle checks"}};

    for (const auto &[name, keys] : keyTables()) {
        auto &st = subs[name];
        st.app = app.add_subcommand(name, descriptions.at(name));
        st.app->add_option("--seed", st.seed, "base random seed");
        st.app->add_option("--out", st.out_dir, "output directory");
        st.app->add_option("--jobs", st.jobs,
                           "worker threads (0 = available cores)");
        st.app->add_option("--config", st.config, "JSON config file");
        for (const auto &key : keys) {
            st.app
                ->add_option("--" + dashed(key.name), st.values[key.name],
                             key.help + " (default " + key.fallback.dump() +
                                 ")")
                ->type_name(typeName(key.kind));
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    try {
        const auto chosen = app.get_subcommands().front()->get_name();
        auto &st = subs.at(chosen);
        const auto &keys = keyTables().at(chosen);

        RunConfig rc;
        rc.experiment = chosen;
        rc.output_dir = defaultOutputDir();
        for (const auto &key : keys) {
            rc.settings[key.name] = key.fallback;
        }
        if (!rc.settings.is_object()) {
            rc.settings = json::object();
        }

        if (st.app->count("--config") > 0) {
            const json file = readJson(st.config);
            require<ConfigError>(file.is_object(),
                                 "config file must hold a JSON object");
            for (const auto &[k, v] : file.items()) {
                if (k == "experiment") {
                    require<ConfigError>(v == chosen,
                                         "config is for experiment " +
                                             v.dump() + ", not " + chosen);
                } else if (k == "seed") {
                    rc.seed = v.get<std::uint64_t>();
                } else if (k == "output_dir") {
                    rc.output_dir = v.get<std::string>();
                } else if (k == "jobs") {
                    rc.jobs = v.get<std::size_t>();
                } else {
                    const auto it = std::find_if(
                        keys.begin(), keys.end(),
                        [&](const KeySpec &ks) { return ks.name == k; });
                    require<ConfigError>(it != keys.end(),
                                         "unknown config key '" + k +
                                             "' for " + chosen);
                    checkType(*it, v);
                    rc.settings[k] = normalize(*it, v);
                }
            }
        }

        if (st.app->count("--seed") > 0) {
            rc.seed = st.seed;
        }
        if (st.app->count("--out") > 0) {
            rc.output_dir = st.out_dir;
        }
        if (st.app->count("--jobs") > 0) {
            rc.jobs = st.jobs;
        }
        for (const auto &key : keys) {
            if (st.app->count("--" + dashed(key.name)) > 0) {
                rc.settings[key.name] = parseValue(key, st.values[key.name]);
            }
        }

        if (chosen == "variance-scan") {
            return runVarianceScan(rc, out);
        }
        if (chosen == "landscape") {
            return runLandscape(rc, out);
        }
        if (chosen == "regression") {
            return runRegression(rc, out);
        }
        if (chosen == "uq") {
            return runUq(rc, out);
        }
        if (chosen == "shot-noise") {
            return runShotNoise(rc, out);
        }
        return runVerify(rc, out);
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const Error &e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const json::exception &e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
}

} // namespace lrpq::cli
