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
 * @file Training.hpp
 * Parameter initialization, Adam, mini-batch training and deep ensembles.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrpq/Autodiff.hpp"
#include "lrpq/Circuit.hpp"

namespace lrpq {

struct AdamConfig {
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};
};

enum class InitScheme { Uniform0To2Pi };

struct TrainConfig {
    double learning_rate{0.1};
    std::size_t batch_size{64};
    std::size_t epochs{100};
    std::uint64_t seed{0};
    InitScheme init{InitScheme::Uniform0To2Pi};
    AdamConfig adam{};

    void validate() const;
};

void to_json(nlohmann::json &j, const TrainConfig &cfg);

/// i.i.d. Uniform[0, 2pi) angles from a generator seeded with `seed`.
ParameterSet initParams(const CircuitSpec &spec, std::uint64_t seed);

/// First and second moment accumulators of Adam.
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;

    static AdamState zeros(std::size_t n) {
        return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    }
};

/**
 * @brief One bias-corrected Adam update at step `t` (t >= 1).
 *
 * Throws NumericError on a non-finite gradient, leaving everything untouched.
 */
void adamStep(std::span<double> params, std::span<const double> grad,
              AdamState &state, std::size_t t, double learning_rate,
              const AdamConfig &adam = {});

struct TrainResult {
    ParameterSet final_params;
    /// Sample-weighted mean of mini-batch losses, one entry per epoch.
    std::vector<double> loss_history;
    double wall_time{0.0};
    TrainConfig config;
    bool failed{false};
    std::string failure;
};

void to_json(nlohmann::json &j, const TrainResult &result);

/**
 * @brief Shuffled mini-batch Adam.
 *
 * The last partial batch of every epoch is kept. A non-finite loss or
 * gradient stops training and returns the partial history with `failed` set.
 */
TrainResult train(const CircuitSpec &spec, const TrainConfig &cfg,
                  std::span<const Sample> dataset, const Objective &objective);

struct EnsembleResult {
    std::vector<TrainResult> members;
    std::vector<std::uint64_t> seeds;

    [[nodiscard]] std::size_t numFailed() const;
};

void to_json(nlohmann::json &j, const EnsembleResult &result);

/// Members trained with seeds cfg.seed + 0 .. K-1.
EnsembleResult trainEnsemble(const CircuitSpec &spec, const TrainConfig &cfg,
                             std::span<const Sample> dataset,
                             const Objective &objective, std::size_t k = 10,
                             std::size_t jobs = 1);

/**
 * @brief Members trained with explicit seeds.
 *
 * Throws NumericError if more than half of the members fail.
 */
EnsembleResult trainEnsemble(const CircuitSpec &spec, const TrainConfig &cfg,
                             std::span<const Sample> dataset,
                             const Objective &objective,
                             std::span<const std::uint64_t> seeds,
                             std::size_t jobs = 1);

} // namespace lrpq
