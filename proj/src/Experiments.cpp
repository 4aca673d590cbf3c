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
#include "lrpq/Experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lrpq/Error.hpp"
#include "lrpq/Parallel.hpp"

namespace lrpq {

namespace {

std::vector<double> averageRanks(std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) {
            ++j;
        }
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[idx[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

double mean(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) /
           static_cast<double>(v.size());
}

std::vector<double> evenGrid(double lo, double hi, std::size_t n) {
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = n == 1 ? lo
                         : lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(n - 1);
    }
    return grid;
}

} // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
    require<InputError>(a.size() == b.size() && a.size() >= 2,
                        "spearman needs two equal-length samples");
    const auto ra = averageRanks(a);
    const auto rb = averageRanks(b);
    const double ma = mean(ra);
    const double mb = mean(rb);
    double cov = 0.0;
    double va = 0.0;
    double vb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(va * vb);
}

double populationVariance(std::span<const double> values) {
    require<InputError>(!values.empty(), "variance of an empty sample");
    const double m = mean(values);
    double acc = 0.0;
    for (double v : values) {
        acc += (v - m) * (v - m);
    }
    return acc / static_cast<double>(values.size());
}

// ---------------------------------------------------------------------------

void VarianceScanConfig::validate() const {
    require<ConfigError>(!depths.empty(), "depth list must be non-empty");
    require<ConfigError>(std::is_sorted(depths.begin(), depths.end()) &&
                             std::adjacent_find(depths.begin(), depths.end()) ==
                                 depths.end(),
                         "depths must be strictly ascending");
    require<ConfigError>(depths.front() >= 1, "depths must be >= 1");
    require<ConfigError>(num_seeds >= 1 && num_ensembles >= 1,
                         "need at least one seed and one ensemble draw");
    require<ConfigError>(param_index < 3 * depths.front() * num_qubits,
                         "param_index exceeds the shallowest circuit");
    CircuitSpec{num_qubits, depths.front(), entangler}.validate();
}

void to_json(nlohmann::json &j, const VarianceScanConfig &cfg) {
    j = nlohmann::json{{"n_qubits", cfg.num_qubits},
                       {"depths", cfg.depths},
                       {"n_seeds", cfg.num_seeds},
                       {"n_ensembles", cfg.num_ensembles},
                       {"head", toString(cfg.head)},
                       {"entangler", toString(cfg.entangler)},
                       {"probe_x", cfg.probe_x},
                       {"probe_target", 0.0},
                       {"param_index", cfg.param_index},
                       {"seed", cfg.seed},
                       {"clamp_eps", cfg.clamp_eps},
                       {"init", "uniform_0_2pi"}};
}

std::vector<double> VarianceScanReport::variancesForSeed(std::size_t s) const {
    const std::size_t nd = config.depths.size();
    std::vector<double> out(nd);
    for (std::size_t d = 0; d < nd; ++d) {
        out[d] = cells[s * nd + d].variance;
    }
    return out;
}

Sample varianceProbe(Head head, std::size_t num_qubits, double x) {
    // Pauli: single output <Z_0>; LRP: every log-ratio output.
    const std::size_t outputs =
        head == Head::Pauli ? 1 : numOutputs(Head::Lrp, num_qubits);
    return {x, std::vector<double>(outputs, 0.0)};
}

VarianceScanReport varianceScan(const VarianceScanConfig &cfg,
                                std::size_t jobs) {
    cfg.validate();
    const std::size_t nd = cfg.depths.size();
    VarianceScanReport report{cfg, std::vector<VarianceCell>(cfg.num_seeds * nd)};
    const Objective objective{cfg.head, LossKind::Mse, cfg.clamp_eps, {}, 1.0};
    const Sample probe = varianceProbe(cfg.head, cfg.num_qubits, cfg.probe_x);

    parallelFor(report.cells.size(), jobs, [&](std::size_t cell) {
        const std::size_t s = cell / nd;
        const std::size_t depth = cfg.depths[cell % nd];
        const std::uint64_t seed = cfg.seed + s;
        const CircuitSpec spec{cfg.num_qubits, depth, cfg.entangler};
        // Every cell owns a stream derived from (seed, depth) only.
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(depth)};
        std::mt19937_64 rng(seq);
        std::vector<double> grads(cfg.num_ensembles);
        for (auto &g : grads) {
            const ParameterSet params = initParams(spec, rng());
            g = lossGradient(spec, params, std::span(&probe, 1),
                             objective)[cfg.param_index];
        }
        report.cells[cell] = {depth, seed, grads.size(), mean(grads),
                              populationVariance(grads)};
    });
    return report;
}

// ---------------------------------------------------------------------------

void LandscapeConfig::validate() const {
    spec.validate();
    require<ConfigError>(spec.numParams() <= kMaxHessianDim,
                         "landscape circuit exceeds the Hessian ceiling");
    require<ConfigError>(resolution >= 3 && resolution % 2 == 1,
                         "resolution must be odd and >= 3 so the grid has a "
                         "center");
    require<ConfigError>(half_width > 0.0, "half width must be positive");
}

void to_json(nlohmann::json &j, const LandscapeConfig &cfg) {
    j = nlohmann::json{{"circuit", cfg.spec},
                       {"head", toString(cfg.head)},
                       {"half_width", cfg.half_width},
                       {"resolution", cfg.resolution},
                       {"probe_x", cfg.probe_x},
                       {"probe_target", 0.0},
                       {"seed", cfg.seed},
                       {"warmup_epochs", cfg.warmup_epochs},
                       {"hessian_step", cfg.hessian_step},
                       {"clamp_eps", cfg.clamp_eps}};
}

double LandscapeReport::maxLoss() const {
    return *std::max_element(surface.begin(), surface.end());
}

LandscapeReport lossLandscape(const LandscapeConfig &cfg,
                              const std::optional<ParameterSet> &reference,
                              std::size_t jobs) {
    cfg.validate();
    const Objective objective{cfg.head, LossKind::Mse, cfg.clamp_eps, {}, 1.0};
    const Sample probe =
        varianceProbe(cfg.head, cfg.spec.num_qubits, cfg.probe_x);
    const std::span<const Sample> batch(&probe, 1);

    LandscapeReport report;
    report.config = cfg;
    if (reference) {
        reference->checkShape(cfg.spec);
        report.reference = *reference;
    } else {
        TrainConfig warmup;
        warmup.epochs = cfg.warmup_epochs;
        warmup.seed = cfg.seed;
        const auto run = train(cfg.spec, warmup, batch, objective);
        require<NumericError>(!run.failed, "warm-up training failed: " +
                                               run.failure);
        report.reference = run.final_params;
    }
    report.reference_loss = batchLoss(cfg.spec, report.reference, batch,
                                      objective);
    const auto h = hessian(cfg.spec, report.reference, batch, objective,
                           cfg.hessian_step);
    report.directions = topHessianDirections(h);

    const std::size_t res = cfg.resolution;
    report.coords = evenGrid(-cfg.half_width, cfg.half_width, res);
    // The center coordinate is exactly zero.
    report.coords[res / 2] = 0.0;
    report.surface.assign(res * res, 0.0);
    const auto base = report.reference.values();
    const auto &v1 = report.directions.first;
    const auto &v2 = report.directions.second;
    parallelFor(res, jobs, [&](std::size_t a) {
        std::vector<double> theta(base.size());
        for (std::size_t b = 0; b < res; ++b) {
            for (std::size_t k = 0; k < theta.size(); ++k) {
                theta[k] = base[k] + report.coords[a] * v1[k] +
                           report.coords[b] * v2[k];
            }
            const ParameterSet point(cfg.spec.num_layers,
                                     cfg.spec.num_qubits, theta);
            report.surface[a * res + b] =
                batchLoss(cfg.spec, point, batch, objective);
        }
    });
    return report;
}

// ---------------------------------------------------------------------------

void RegressionConfig::validate() const {
    spec.validate();
    train.validate();
    require<ConfigError>(num_outputs >= 1 && num_outputs <= 3,
                         "regression supports 1 to 3 outputs");
    if (head == Head::Pauli && num_outputs > spec.num_qubits) {
        throw ConfigError(
            "the Pauli head exposes one output per qubit: a " +
            std::to_string(spec.num_qubits) +
            "-qubit circuit is unable to regress output " +
            std::to_string(spec.num_qubits + 1) + " of " +
            std::to_string(num_outputs));
    }
    require<ConfigError>(num_outputs <= numOutputs(head, spec.num_qubits),
                         "more outputs requested than the head exposes");
    require<ConfigError>(ensemble >= 2, "ensemble needs at least two members");
    require<ConfigError>(grid_points >= 2, "prediction grid needs >= 2 points");
}

void to_json(nlohmann::json &j, const RegressionConfig &cfg) {
    j = nlohmann::json{{"n_outputs", cfg.num_outputs},
                       {"head", toString(cfg.head)},
                       {"circuit", cfg.spec},
                       {"train", cfg.train},
                       {"n_points", cfg.num_points},
                       {"x_range", {cfg.x_min, cfg.x_max}},
                       {"noise_sigma", cfg.noise_sigma},
                       {"data_seed", cfg.data_seed},
                       {"ensemble", cfg.ensemble},
                       {"grid_points", cfg.grid_points},
                       {"clamp_eps", cfg.clamp_eps}};
}

double RegressionReport::meanFinalMse() const {
    return lrpq::mean(final_mse);
}

RegressionReport regressionExperiment(const RegressionConfig &cfg,
                                      std::size_t jobs) {
    cfg.validate();
    RegressionReport report;
    report.config = cfg;
    report.dataset = makeTrigDataset(cfg.num_points, cfg.x_min, cfg.x_max,
                                     cfg.noise_sigma, cfg.num_outputs,
                                     cfg.data_seed);
    const auto samples = report.dataset.samples();
    const Objective objective{cfg.head, LossKind::Mse, cfg.clamp_eps, {}, 1.0};
    report.ensemble = trainEnsemble(cfg.spec, cfg.train, samples, objective,
                                    cfg.ensemble, jobs);

    report.grid = evenGrid(cfg.x_min, cfg.x_max, cfg.grid_points);
    const std::size_t k = report.ensemble.members.size();
    report.predictions.assign(k, {});
    report.final_mse.assign(k, 0.0);
    for (std::size_t m = 0; m < k; ++m) {
        const auto &params = report.ensemble.members[m].final_params;
        for (double x : report.grid) {
            const auto probs = forward(cfg.spec, params, x).probabilities();
            auto out = headOutputs(objective, probs, cfg.spec.num_qubits);
            out.resize(cfg.num_outputs);
            report.predictions[m].push_back(std::move(out));
        }
        report.final_mse[m] = batchLoss(cfg.spec, params, samples, objective);
    }

    report.mean.assign(report.grid.size(),
                       std::vector<double>(cfg.num_outputs, 0.0));
    report.stddev = report.mean;
    std::vector<double> column(k);
    for (std::size_t g = 0; g < report.grid.size(); ++g) {
        for (std::size_t o = 0; o < cfg.num_outputs; ++o) {
            for (std::size_t m = 0; m < k; ++m) {
                column[m] = report.predictions[m][g][o];
            }
            report.mean[g][o] = mean(column);
            report.stddev[g][o] = std::sqrt(populationVariance(column));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

void UqConfig::validate() const {
    spec.validate();
    train.validate();
    data.validate();
    require<ConfigError>(ensemble >= 2, "ensemble needs at least two members");
    require<ConfigError>(grid_points >= 2, "grid needs >= 2 points");
    require<ConfigError>(indices.mean != indices.log_variance,
                         "mean and log-variance indices must differ");
    require<ConfigError>(
        std::max(indices.mean, indices.log_variance) <
            numOutputs(Head::Lrp, spec.num_qubits),
        "Gaussian indices exceed the LRP outputs");
}

void to_json(nlohmann::json &j, const UqConfig &cfg) {
    j = nlohmann::json{{"circuit", cfg.spec},
                       {"train", cfg.train},
                       {"data", cfg.data},
                       {"data_seed", cfg.data_seed},
                       {"ensemble", cfg.ensemble},
                       {"grid_points", cfg.grid_points},
                       {"mean_index", cfg.indices.mean},
                       {"log_variance_index", cfg.indices.log_variance},
                       {"sigma_parameterization", "sigma^2 = exp(output)"},
                       {"clamp_eps", cfg.clamp_eps}};
}

double UqReport::meanOver(const Interval &range,
                          double UncertaintyPoint::*field) const {
    double acc = 0.0;
    std::size_t count = 0;
    for (const auto &p : decomposition) {
        if (range.contains(p.x)) {
            acc += p.*field;
            ++count;
        }
    }
    require<ConfigError>(count > 0, "no grid points inside the interval");
    return acc / static_cast<double>(count);
}

UncertaintyPoint decomposeUncertainty(double x, std::span<const double> mus,
                                      std::span<const double> variances) {
    require<InputError>(!mus.empty() && mus.size() == variances.size(),
                        "uncertainty decomposition needs matching members");
    UncertaintyPoint p{x, mean(mus), mean(variances), populationVariance(mus),
                       0.0};
    p.total = p.aleatoric + p.epistemic;
    return p;
}

UqReport uqExperiment(const UqConfig &cfg, std::size_t jobs) {
    cfg.validate();
    UqReport report;
    report.config = cfg;
    report.dataset = makeSparseNoisySine(cfg.data_seed, cfg.data);
    const auto samples = report.dataset.samples();
    const Objective objective{Head::Lrp, LossKind::Nll, cfg.clamp_eps,
                              cfg.indices, 1.0};
    report.ensemble = trainEnsemble(cfg.spec, cfg.train, samples, objective,
                                    cfg.ensemble, jobs);
    report.grid = evenGrid(cfg.data.x_min, cfg.data.x_max, cfg.grid_points);

    const std::size_t k = report.ensemble.members.size();
    report.mu.assign(k, std::vector<double>(report.grid.size()));
    report.variance = report.mu;
    report.excluded.assign(k, false);
    std::size_t saturated = 0;
    for (std::size_t m = 0; m < k; ++m) {
        const auto &member = report.ensemble.members[m];
        if (member.failed) {
            report.excluded[m] = true;
            report.warnings.push_back("member " + std::to_string(m) +
                                      " failed: " + member.failure);
            continue;
        }
        bool member_saturated = false;
        for (std::size_t g = 0; g < report.grid.size(); ++g) {
            const auto probs =
                forward(cfg.spec, member.final_params, report.grid[g])
                    .probabilities();
            const auto pred = toGaussian(
                lrpOutputs(probs, cfg.clamp_eps).values, cfg.indices,
                cfg.clamp_eps);
            report.mu[m][g] = pred.mu;
            report.variance[m][g] = pred.sigma * pred.sigma;
            member_saturated = member_saturated || pred.saturated;
        }
        if (member_saturated) {
            report.excluded[m] = true;
            ++saturated;
        }
    }
    if (2 * saturated > k) {
        report.warnings.push_back(std::to_string(saturated) + " of " +
                                  std::to_string(k) +
                                  " members have a saturated sigma output");
    }

    std::vector<double> mus;
    std::vector<double> vars;
    for (std::size_t g = 0; g < report.grid.size(); ++g) {
        mus.clear();
        vars.clear();
        for (std::size_t m = 0; m < k; ++m) {
            if (!report.excluded[m]) {
                mus.push_back(report.mu[m][g]);
                vars.push_back(report.variance[m][g]);
            }
        }
        require<NumericError>(!mus.empty(),
                              "every ensemble member was excluded");
        report.decomposition.push_back(
            decomposeUncertainty(report.grid[g], mus, vars));
    }
    return report;
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> sampleShots(std::span<const double> probs,
                                       std::uint64_t n_shots,
                                       std::mt19937_64 &rng) {
    require<ConfigError>(n_shots >= 1, "need at least one shot");
    require<InputError>(!probs.empty(), "empty probability vector");
    // Conditional binomial decomposition of the multinomial.
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::uint64_t remaining = n_shots;
    double mass = 1.0;
    for (std::size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
        const double p = mass > 0.0 ? std::clamp(probs[i] / mass, 0.0, 1.0)
                                    : 0.0;
        std::binomial_distribution<std::uint64_t> draw(remaining, p);
        counts[i] = draw(rng);
        remaining -= counts[i];
        mass -= probs[i];
    }
    counts.back() += remaining;
    return counts;
}

std::vector<std::uint64_t> sampleShots(std::span<const double> probs,
                                       std::uint64_t n_shots,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sampleShots(probs, n_shots, rng);
}

std::vector<double> lrpFromCounts(std::span<const std::uint64_t> counts,
                                  double pseudo_count) {
    require<ConfigError>(counts.size() >= 2, "need at least two outcomes");
    require<ConfigError>(pseudo_count > 0.0, "pseudo-count must be positive");
    const auto adjusted = [&](std::uint64_t c) {
        return c == 0 ? pseudo_count : static_cast<double>(c);
    };
    const double log_ref = std::log(adjusted(counts.back()));
    std::vector<double> out(counts.size() - 1);
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
        out[i] = std::log(adjusted(counts[i])) - log_ref;
    }
    return out;
}

void ShotNoiseConfig::validate() const {
    require<ConfigError>(!qubits.empty() && !shots.empty(),
                         "qubit and shot lists must be non-empty");
    require<ConfigError>(repeats >= 2, "need at least two repeats");
    for (auto n : qubits) {
        require<ConfigError>(n >= 1 && n <= kMaxQubits, "bad qubit count");
    }
    for (auto s : shots) {
        require<ConfigError>(s >= 1, "shot counts must be >= 1");
    }
    require<ConfigError>(pseudo_count > 0.0, "pseudo-count must be positive");
}

void to_json(nlohmann::json &j, const ShotNoiseConfig &cfg) {
    j = nlohmann::json{{"qubits", cfg.qubits},
                       {"shots", cfg.shots},
                       {"repeats", cfg.repeats},
                       {"seed", cfg.seed},
                       {"pseudo_count", cfg.pseudo_count},
                       {"state", "Ry(pi/2) on every qubit"},
                       {"prediction", "2 * 2^n / N"}};
}

const ShotNoiseCell &ShotNoiseReport::cell(std::size_t num_qubits,
                                           std::uint64_t shots,
                                           std::size_t output_index) const {
    for (const auto &c : cells) {
        if (c.num_qubits == num_qubits && c.shots == shots &&
            c.output_index == output_index) {
            return c;
        }
    }
    throw IndexError("no shot-noise cell for the requested point");
}

StateVector balancedState(std::size_t num_qubits) {
    StateVector state(num_qubits);
    const Matrix2 gate = gates::ry(std::numbers::pi / 2);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        state.applyGate(gate, q);
    }
    return state;
}

ShotNoiseReport shotNoiseScan(const ShotNoiseConfig &cfg, std::size_t jobs) {
    cfg.validate();
    const std::size_t nn = cfg.qubits.size();
    const std::size_t ns = cfg.shots.size();
    std::vector<std::vector<ShotNoiseCell>> blocks(nn * ns);

    parallelFor(nn * ns, jobs, [&](std::size_t job) {
        const std::size_t n = cfg.qubits[job / ns];
        const std::uint64_t shots = cfg.shots[job % ns];
        const auto probs = balancedState(n).probabilities();
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                          static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(n),
                          static_cast<std::uint32_t>(shots),
                          static_cast<std::uint32_t>(shots >> 32)};
        std::mt19937_64 rng(seq);
        const std::size_t outputs = probs.size() - 1;
        std::vector<std::vector<double>> estimates(
            outputs, std::vector<double>(cfg.repeats));
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            const auto y =
                lrpFromCounts(sampleShots(probs, shots, rng), cfg.pseudo_count);
            for (std::size_t i = 0; i < outputs; ++i) {
                estimates[i][r] = y[i];
            }
        }
        const double predicted =
            2.0 * static_cast<double>(std::size_t{1} << n) /
            static_cast<double>(shots);
        for (std::size_t i = 0; i < outputs; ++i) {
            blocks[job].push_back({n, shots, i,
                                   populationVariance(estimates[i]), predicted,
                                   shots < (std::uint64_t{1} << n)});
        }
    });

    ShotNoiseReport report{cfg, {}};
    for (auto &block : blocks) {
        report.cells.insert(report.cells.end(), block.begin(), block.end());
    }
    return report;
}

} // namespace lrpq
