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
 * @file Datasets.hpp
 * Synthetic regression datasets: noisy trigonometric targets and a sine with
 * a data gap and a heteroscedastic noisy band.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "lrpq/Autodiff.hpp"

namespace lrpq {

struct Dataset {
    std::vector<double> inputs;
    /// targets[row][output]
    std::vector<std::vector<double>> targets;
    double noise_sigma{0.0};
    std::uint64_t seed{0};
    nlohmann::json metadata = nlohmann::json::object();

    [[nodiscard]] std::size_t size() const { return inputs.size(); }
    [[nodiscard]] std::vector<Sample> samples() const;
};

struct Interval {
    double lo;
    double hi;

    [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Clean targets {sin x, cos x, -cos x} truncated to `n_outputs`.
std::vector<double> trigTargets(double x, std::size_t n_outputs);

/**
 * @brief Evenly spaced x over [x_min, x_max) with targets
 * {sin x, cos x, -cos x}[:n_outputs] plus N(0, noise_sigma^2) noise.
 *
 * Requires n_points >= 2 and n_outputs in {1, 2, 3}.
 */
Dataset makeTrigDataset(std::size_t n_points, double x_min, double x_max,
                        double noise_sigma, std::size_t n_outputs,
                        std::uint64_t seed);

struct SparseSineConfig {
    std::size_t n_grid{100};
    double x_min{0.0};
    double x_max{2.0 * std::numbers::pi};
    Interval gap{2.5, 4.0};
    Interval noisy{4.5, 6.0};
    /// Densely sampled low-noise region used as the comparison baseline.
    Interval quiet{0.5, 2.0};
    double sigma_quiet{0.02};
    double sigma_noisy{0.25};

    void validate() const;
};

void to_json(nlohmann::json &j, const SparseSineConfig &cfg);

/**
 * @brief y = sin x on an even grid over [x_min, x_max) with grid points in
 * the gap removed; noise sigma_noisy inside the noisy band, sigma_quiet
 * elsewhere.
 */
Dataset makeSparseNoisySine(std::uint64_t seed,
                            const SparseSineConfig &cfg = {});

} // namespace lrpq
