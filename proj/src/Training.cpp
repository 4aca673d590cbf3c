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
#include "lrpq/Training.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "lrpq/Error.hpp"
#include "lrpq/Parallel.hpp"

namespace lrpq {

void TrainConfig::validate() const {
    require<ConfigError>(learning_rate > 0.0 && std::isfinite(learning_rate),
                         "learning_rate must be positive");
    require<ConfigError>(batch_size >= 1, "batch_size must be >= 1");
    require<ConfigError>(adam.beta1 >= 0.0 && adam.beta1 < 1.0 &&
                             adam.beta2 >= 0.0 && adam.beta2 < 1.0 &&
                             adam.epsilon > 0.0,
                         "invalid Adam hyperparameters");
}

void to_json(nlohmann::json &j, const TrainConfig &cfg) {
    j = nlohmann::json{{"learning_rate", cfg.learning_rate},
                       {"batch_size", cfg.batch_size},
                       {"epochs", cfg.epochs},
                       {"seed", cfg.seed},
                       {"init", "uniform_0_2pi"},
                       {"adam",
                        {{"beta1", cfg.adam.beta1},
                         {"beta2", cfg.adam.beta2},
                         {"eps", cfg.adam.epsilon}}}};
}

ParameterSet initParams(const CircuitSpec &spec, std::uint64_t seed) {
    spec.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> values(spec.numParams());
    for (double &v : values) {
        v = angle(rng);
    }
    return {spec.num_layers, spec.num_qubits, std::move(values)};
}

void adamStep(std::span<double> params, std::span<const double> grad,
              AdamState &state, std::size_t t, double learning_rate,
              const AdamConfig &adam) {
    require<ConfigError>(t >= 1, "Adam step index starts at 1");
    require<ConfigError>(params.size() == grad.size() &&
                             state.m.size() == grad.size() &&
                             state.v.size() == grad.size(),
                         "Adam shape mismatch");
    for (std::size_t i = 0; i < grad.size(); ++i) {
        require<NumericError>(std::isfinite(grad[i]),
                              "non-finite gradient at component " +
                                  std::to_string(i));
    }
    const double td = static_cast<double>(t);
    const double m_corr = 1.0 - std::pow(adam.beta1, td);
    const double v_corr = 1.0 - std::pow(adam.beta2, td);
    for (std::size_t i = 0; i < grad.size(); ++i) {
        state.m[i] = adam.beta1 * state.m[i] + (1.0 - adam.beta1) * grad[i];
        state.v[i] =
            adam.beta2 * state.v[i] + (1.0 - adam.beta2) * grad[i] * grad[i];
        const double m_hat = state.m[i] / m_corr;
        const double v_hat = state.v[i] / v_corr;
        params[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + adam.epsilon);
    }
}

void to_json(nlohmann::json &j, const TrainResult &result) {
    j = nlohmann::json{{"final_params", result.final_params},
                       {"loss_history", result.loss_history},
                       {"wall_time", result.wall_time},
                       {"config", result.config},
                       {"failed", result.failed}};
    if (result.failed) {
        j["failure"] = result.failure;
    }
}

TrainResult train(const CircuitSpec &spec, const TrainConfig &cfg,
                  std::span<const Sample> dataset,
                  const Objective &objective) {
    spec.validate();
    cfg.validate();
    require<InputError>(!dataset.empty(), "training dataset is empty");
    for (const auto &sample : dataset) {
        objective.check(spec, sample);
    }

    const auto start = std::chrono::steady_clock::now();
    TrainResult result{initParams(spec, cfg.seed), {}, 0.0, cfg, false, {}};
    // Shuffling draws from its own stream so that initialization does not
    // depend on dataset size.
    std::mt19937_64 shuffle_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    AdamState adam = AdamState::zeros(spec.numParams());
    std::vector<Sample> batch;
    batch.reserve(cfg.batch_size);
    std::size_t step = 0;

    for (std::size_t epoch = 0; epoch < cfg.epochs && !result.failed;
         ++epoch) {
        std::shuffle(order.begin(), order.end(), shuffle_rng);
        double epoch_loss = 0.0;
        for (std::size_t begin = 0; begin < order.size();
             begin += cfg.batch_size) {
            const std::size_t end =
                std::min(begin + cfg.batch_size, order.size());
            batch.clear();
            for (std::size_t k = begin; k < end; ++k) {
                batch.push_back(dataset[order[k]]);
            }
            try {
                const auto lg = lossAndGradient(spec, result.final_params,
                                                batch, objective);
                adamStep(result.final_params.values(), lg.gradient, adam,
                         ++step, cfg.learning_rate, cfg.adam);
                epoch_loss += lg.loss * static_cast<double>(end - begin);
            } catch (const NumericError &e) {
                result.failed = true;
                result.failure = "epoch " + std::to_string(epoch) + ": " +
                                 e.what();
                break;
            }
        }
        if (!result.failed) {
            result.loss_history.push_back(epoch_loss /
                                          static_cast<double>(order.size()));
        }
    }
    result.wall_time = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return result;
}

std::size_t EnsembleResult::numFailed() const {
    return static_cast<std::size_t>(
        std::count_if(members.begin(), members.end(),
                      [](const TrainResult &r) { return r.failed; }));
}

void to_json(nlohmann::json &j, const EnsembleResult &result) {
    j = nlohmann::json{{"seeds", result.seeds},
                       {"members", result.members},
                       {"failed_members", result.numFailed()}};
}

EnsembleResult trainEnsemble(const CircuitSpec &spec, const TrainConfig &cfg,
                             std::span<const Sample> dataset,
                             const Objective &objective, std::size_t k,
                             std::size_t jobs) {
    require<ConfigError>(k >= 2, "an ensemble needs at least two members");
    std::vector<std::uint64_t> seeds(k);
    for (std::size_t i = 0; i < k; ++i) {
        seeds[i] = cfg.seed + i;
    }
    return trainEnsemble(spec, cfg, dataset, objective, seeds, jobs);
}

EnsembleResult trainEnsemble(const CircuitSpec &spec, const TrainConfig &cfg,
                             std::span<const Sample> dataset,
                             const Objective &objective,
                             std::span<const std::uint64_t> seeds,
                             std::size_t jobs) {
    require<ConfigError>(seeds.size() >= 2,
                         "an ensemble needs at least two members");
    EnsembleResult out;
    out.seeds.assign(seeds.begin(), seeds.end());
    out.members.resize(seeds.size());
    parallelFor(seeds.size(), jobs, [&](std::size_t i) {
        TrainConfig member_cfg = cfg;
        member_cfg.seed = seeds[i];
        out.members[i] = train(spec, member_cfg, dataset, objective);
    });
    require<NumericError>(2 * out.numFailed() <= seeds.size(),
                          "more than half of the ensemble members failed");
    return out;
}

} // namespace lrpq
