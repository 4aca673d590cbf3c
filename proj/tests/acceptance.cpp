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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "lrpq/Autodiff.hpp"
#include "lrpq/Cli.hpp"
#include "lrpq/Experiments.hpp"
#include "lrpq/Parallel.hpp"
#include "lrpq/Report.hpp"
#include "lrpq/Training.hpp"
#include "lrpq/Verify.hpp"

using namespace lrpq;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(double v, int precision = 4) {
    std::ostringstream ss;
    ss << std::setprecision(precision) << v;
    return ss.str();
}

// Analytic vs central-difference gradients over 100 random circuits covering
// both heads and both losses, n <= 4 and L <= 5.
Outcome gradientOracle() {
    std::mt19937_64 rng(20260);
    std::uniform_real_distribution<double> xs(-kPi, kPi);
    std::normal_distribution<double> ys(0.0, 1.0);
    std::size_t components = 0;
    std::size_t bad = 0;
    std::size_t roundoff_limited = 0;
    double worst_rel = 0.0;
    std::size_t combos[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t i = 0; i < 100; ++i) {
        const Head head = i % 2 ? Head::Lrp : Head::Pauli;
        const LossKind loss = (i / 2) % 2 ? LossKind::Nll : LossKind::Mse;
        std::size_t n = 1 + (i / 4) % 4;
        if (loss == LossKind::Nll) {
            n = std::max<std::size_t>(n, 2);
        }
        const std::size_t layers = 1 + (i / 16 + i) % 5;
        const CircuitSpec spec{n, layers,
                               i % 3 ? Entangler::Chain : Entangler::Ring};
        const auto params = initParams(spec, rng());
        const Objective obj{head, loss};
        const std::size_t width =
            loss == LossKind::Nll ? 1 : numOutputs(head, n);
        std::vector<Sample> batch;
        for (int s = 0; s < 2; ++s) {
            Sample sample{xs(rng), std::vector<double>(width)};
            for (auto &t : sample.target) {
                t = ys(rng);
            }
            batch.push_back(std::move(sample));
        }
        const auto [loss_value, exact] =
            lossAndGradient(spec, params, batch, obj);
        const auto fd = finiteDiffGradient(spec, params, batch, obj, 1e-5);
        // A second difference at twice the step estimates the round-off
        // noise of the step-1e-5 value; it cannot hide a wrong adjoint, since
        // both differences would then agree with each other and not with it.
        const auto fd2 = finiteDiffGradient(spec, params, batch, obj, 2e-5);
        for (std::size_t j = 0; j < exact.size(); ++j) {
            ++components;
            if (!gradientsAgree(exact[j], fd[j]) &&
                std::abs(exact[j] - fd[j]) <= 2.0 * std::abs(fd[j] - fd2[j])) {
                ++roundoff_limited;
                continue;
            }
            if (!gradientsAgree(exact[j], fd[j])) {
                ++bad;
                std::cerr << "  config " << i << " (n=" << n << ", L=" << layers
                          << ", " << toString(head) << "/" << toString(loss)
                          << ") component " << j << ": adjoint " << exact[j]
                          << ", finite difference " << fd[j] << ", loss "
                          << loss_value << '\n';
            }
            const double scale = std::max(std::abs(exact[j]), std::abs(fd[j]));
            if (scale > 1e-3) {
                worst_rel =
                    std::max(worst_rel, std::abs(exact[j] - fd[j]) / scale);
            }
        }
        ++combos[head == Head::Lrp][loss == LossKind::Nll];
    }
    const bool covered = combos[0][0] && combos[0][1] && combos[1][0] &&
                         combos[1][1];
    return {bad == 0 && covered,
            std::to_string(bad) + "/" + std::to_string(components) +
                " components outside rel 1e-6 (abs floor 1e-8); " +
                std::to_string(roundoff_limited) +
                " more only within the finite-difference noise estimate; max rel "
                "err "
                "where |g| > 1e-3: " +
                fmt(worst_rel, 3)};
}

Outcome roundTrip() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> logp(std::log(2e-10), 0.0);
    double worst = 0.0;
    double smallest = 1.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t dim = std::size_t{2} << (t % 5);
        std::vector<double> p(dim);
        double sum = 0.0;
        for (auto &v : p) {
            v = std::exp(logp(rng));
            sum += v;
        }
        for (auto &v : p) {
            v /= sum;
        }
        if (*std::min_element(p.begin(), p.end()) <= 1e-10) {
            --t;
            continue;
        }
        smallest = std::min(smallest, *std::min_element(p.begin(), p.end()));
        const auto back = lrpInverse(lrpOutputs(p).values);
        for (std::size_t i = 0; i < dim; ++i) {
            worst = std::max(worst, std::abs(back[i] - p[i]));
        }
    }
    return {worst < 1e-12, "max abs error " + fmt(worst, 3) +
                               " over 1000 vectors (smallest p " +
                               fmt(smallest, 3) + ")"};
}

Outcome barrenPlateau() {
    VarianceScanConfig cfg; // n = 4, depths 2..16, 5 seeds x 100 draws
    cfg.head = Head::Pauli;
    const auto pauli = varianceScan(cfg, 0);
    cfg.head = Head::Lrp;
    const auto lrp = varianceScan(cfg, 0);

    const std::vector<double> depths(cfg.depths.begin(), cfg.depths.end());
    bool ok = true;
    std::string rho_list;
    std::string pauli_ratio;
    std::string lrp_ratio;
    for (std::size_t s = 0; s < cfg.num_seeds; ++s) {
        const auto pv = pauli.variancesForSeed(s);
        const auto lv = lrp.variancesForSeed(s);
        const double rho = spearman(depths, pv);
        const double pr = pv.back() / pv.front();
        const double lr = lv.back() / lv.front();
        ok = ok && rho < -0.8 && pr < 0.1 && lr > 0.5;
        rho_list += (s ? "," : "") + fmt(rho, 3);
        pauli_ratio += (s ? "," : "") + fmt(pr, 3);
        lrp_ratio += (s ? "," : "") + fmt(lr, 3);
    }
    return {ok, "pauli spearman [" + rho_list + "] (< -0.8), pauli Var16/Var2 [" +
                    pauli_ratio + "] (< 0.1), lrp Var16/Var2 [" + lrp_ratio +
                    "] (> 0.5)"};
}

struct RegressionRuns {
    RegressionReport lrp3;
    RegressionReport lrp2;
    RegressionReport pauli2;
};

RegressionRuns regressionRuns() {
    RegressionConfig cfg; // 2 qubits, 3 layers, sigma 0.1, 100 epochs, K = 10
    RegressionRuns r;
    r.lrp3 = regressionExperiment(cfg, 0);
    cfg.num_outputs = 2;
    r.lrp2 = regressionExperiment(cfg, 0);
    cfg.head = Head::Pauli;
    r.pauli2 = regressionExperiment(cfg, 0);
    return r;
}

Outcome multiOutputRegression(const RegressionRuns &r) {
    const double mean_mse = r.lrp3.meanFinalMse();
    std::size_t wins = 0;
    for (std::size_t k = 0; k < r.lrp2.final_mse.size(); ++k) {
        if (r.lrp2.final_mse[k] < r.pauli2.final_mse[k]) {
            ++wins;
        }
    }
    return {mean_mse < 0.05 && wins >= 8,
            "3-output ensemble-mean final MSE " + fmt(mean_mse) +
                " (< 0.05); 2-output LRP beats Pauli in " +
                std::to_string(wins) + "/10 paired seeds (>= 8); mean MSE "
                "LRP " + fmt(r.lrp2.meanFinalMse()) + ", Pauli " +
                fmt(r.pauli2.meanFinalMse())};
}

Outcome outputBounds(const RegressionRuns &r) {
    double pauli_max = 0.0;
    for (const auto &m : r.pauli2.predictions) {
        for (const auto &row : m) {
            for (double v : row) {
                pauli_max = std::max(pauli_max, std::abs(v));
            }
        }
    }
    double lrp_max = 0.0;
    for (const auto &m : r.lrp3.predictions) {
        for (const auto &row : m) {
            for (double v : row) {
                lrp_max = std::max(lrp_max, std::abs(v));
            }
        }
    }
    return {pauli_max <= 1.0 && lrp_max > 1.0,
            "max |pauli prediction| " + fmt(pauli_max) +
                " (<= 1); max |lrp prediction| " + fmt(lrp_max) + " (> 1)"};
}

Outcome uncertainty() {
    const UqConfig cfg;
    const auto r = uqExperiment(cfg, 0);
    bool identity = true;
    for (const auto &p : r.decomposition) {
        identity = identity && p.total == p.aleatoric + p.epistemic;
    }
    const auto &d = cfg.data;
    const double epi = r.meanOver(d.gap, &UncertaintyPoint::epistemic) /
                       r.meanOver(d.quiet, &UncertaintyPoint::epistemic);
    const double ale = r.meanOver(d.noisy, &UncertaintyPoint::aleatoric) /
                       r.meanOver(d.quiet, &UncertaintyPoint::aleatoric);
    std::size_t excluded = 0;
    for (bool e : r.excluded) {
        excluded += e ? 1 : 0;
    }
    return {identity && epi >= 2.0 && ale >= 2.0,
            std::string("identity ") + (identity ? "exact" : "VIOLATED") +
                "; epistemic gap/quiet " + fmt(epi) +
                " (>= 2); aleatoric noisy/quiet " + fmt(ale) +
                " (>= 2); members excluded " + std::to_string(excluded)};
}

Outcome shotNoise() {
    const ShotNoiseConfig cfg;
    const auto r = shotNoiseScan(cfg, 0);
    bool within = true;
    bool monotone = true;
    double lo = 1e300;
    double hi = 0.0;
    for (std::size_t n : cfg.qubits) {
        double prev = 1e300;
        for (std::uint64_t shots : cfg.shots) {
            const auto &c = r.cell(n, shots, 0);
            const double ratio = c.empirical_variance / c.predicted_variance;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            within = within && ratio >= 0.5 && ratio <= 2.0;
            monotone = monotone && c.empirical_variance < prev;
            prev = c.empirical_variance;
        }
    }
    return {within && monotone,
            "empirical/predicted Var[y0] in [" + fmt(lo) + ", " + fmt(hi) +
                "] (within [0.5, 2]), decreasing in N at every n: " +
                (monotone ? "yes" : "no")};
}

Outcome determinism() {
    const auto root = fs::temp_directory_path() / "lrpq_acceptance_rerun";
    fs::remove_all(root);
    const std::vector<std::string> experiments{
        "variance-scan", "landscape", "regression", "uq", "shot-noise"};
    std::size_t identical = 0;
    std::size_t files = 0;
    for (const auto &exp : experiments) {
        std::vector<std::vector<std::string>> bodies(2);
        for (int run = 0; run < 2; ++run) {
            const auto dir = root / exp / std::to_string(run);
            std::ostringstream out;
            std::ostringstream err;
            const int code =
                cli::run({exp, "--seed", "11", "--jobs", run ? "0" : "1",
                          "--out", dir.string()},
                         out, err);
            if (code != cli::kExitOk) {
                return {false, exp + " exited with " + std::to_string(code) +
                                   ": " + err.str()};
            }
            std::vector<fs::path> csvs;
            for (const auto &e : fs::directory_iterator(dir)) {
                if (e.path().extension() == ".csv") {
                    csvs.push_back(e.path());
                }
            }
            std::sort(csvs.begin(), csvs.end());
            for (const auto &p : csvs) {
                bodies[run].push_back(csvBody(readCsv(p)));
            }
        }
        files += bodies[0].size();
        if (bodies[0] == bodies[1] && !bodies[0].empty()) {
            identical += bodies[0].size();
        }
    }
    fs::remove_all(root);
    return {identical == files && files > 0,
            std::to_string(identical) + "/" + std::to_string(files) +
                " CSV bodies byte-identical across serial and threaded "
                "reruns of all five experiments"};
}

template <class Fn> Outcome timed(double limit_s, double &elapsed, Fn &&fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = fn();
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    if (limit_s > 0.0 && elapsed > limit_s) {
        o.passed = false;
        o.detail += "; runtime over the " + fmt(limit_s) + " s limit";
    }
    return o;
}

} // namespace

int main() {
    std::cout << "hardware threads: " << defaultJobs() << '\n';
    bool all = true;
    const auto report = [&](const std::string &id, const std::string &name,
                            const Outcome &o, double seconds) {
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << id << ' ' << name
                  << ": " << o.detail << " (" << fmt(seconds, 3) << " s)"
                  << std::endl;
        all = all && o.passed;
    };
    const auto guarded = [](auto fn) {
        return [fn]() -> Outcome {
            try {
                return fn();
            } catch (const std::exception &e) {
                return {false, std::string("exception: ") + e.what()};
            }
        };
    };

    double t = 0.0;
    auto o = timed(60, t, guarded(gradientOracle));
    report("AC1", "gradient oracle", o, t);

    o = timed(0, t, guarded(roundTrip));
    report("AC2", "log-ratio round trip", o, t);

    o = timed(600, t, guarded(barrenPlateau));
    report("AC3", "barren-plateau variance scan", o, t);

    RegressionRuns runs;
    double t_reg = 0.0;
    o = timed(600, t_reg, guarded([&] {
                  runs = regressionRuns();
                  return multiOutputRegression(runs);
              }));
    report("AC4", "multi-output regression", o, t_reg);

    o = timed(0, t, guarded([&] { return outputBounds(runs); }));
    report("AC5", "output bounds", o, t);

    o = timed(600, t, guarded(uncertainty));
    report("AC6", "ensemble uncertainty decomposition", o, t);

    o = timed(120, t, guarded(shotNoise));
    report("AC7", "shot-noise scaling", o, t);

    o = timed(0, t, guarded(determinism));
    report("AC8", "determinism", o, t);

    std::cout << (all ? "all acceptance criteria passed"
                      : "some acceptance criteria FAILED")
              << std::endl;
    return all ? 0 : 1;
}
