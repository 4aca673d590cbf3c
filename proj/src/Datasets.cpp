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
#include "lrpq/Datasets.hpp"

#include <cmath>
#include <random>

#include "lrpq/Error.hpp"

namespace lrpq {

std::vector<Sample> Dataset::samples() const {
    std::vector<Sample> out;
    out.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out.push_back({inputs[i], targets[i]});
    }
    return out;
}

std::vector<double> trigTargets(double x, std::size_t n_outputs) {
    const std::vector<double> all{std::sin(x), std::cos(x), -std::cos(x)};
    return {all.begin(),
            all.begin() + static_cast<std::ptrdiff_t>(n_outputs)};
}

Dataset makeTrigDataset(std::size_t n_points, double x_min, double x_max,
                        double noise_sigma, std::size_t n_outputs,
                        std::uint64_t seed) {
    require<ConfigError>(n_points >= 2, "need at least two points");
    require<ConfigError>(n_outputs >= 1 && n_outputs <= 3,
                         "trig dataset supports 1 to 3 outputs");
    require<ConfigError>(x_max > x_min, "empty x range");
    require<ConfigError>(noise_sigma >= 0.0, "noise sigma must be >= 0");

    Dataset ds;
    ds.noise_sigma = noise_sigma;
    ds.seed = seed;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    const double dx = (x_max - x_min) / static_cast<double>(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = x_min + dx * static_cast<double>(i);
        auto y = trigTargets(x, n_outputs);
        for (double &v : y) {
            v += noise_sigma * noise(rng);
        }
        ds.inputs.push_back(x);
        ds.targets.push_back(std::move(y));
    }
    ds.metadata = {{"kind", "trig"},
                   {"n_points", n_points},
                   {"x_range", {x_min, x_max}},
                   {"noise_sigma", noise_sigma},
                   {"n_outputs", n_outputs},
                   {"targets", "sin x, cos x, -cos x"},
                   {"seed", seed}};
    return ds;
}

void SparseSineConfig::validate() const {
    require<ConfigError>(n_grid >= 2 && x_max > x_min,
                         "sparse sine needs a non-empty grid");
    require<ConfigError>(gap.lo < gap.hi && noisy.lo < noisy.hi &&
                             quiet.lo < quiet.hi,
                         "intervals must have lo < hi");
    require<ConfigError>(sigma_quiet >= 0.0 && sigma_noisy >= 0.0,
                         "noise levels must be >= 0");
}

void to_json(nlohmann::json &j, const SparseSineConfig &cfg) {
    j = nlohmann::json{{"n_grid", cfg.n_grid},
                       {"x_range", {cfg.x_min, cfg.x_max}},
                       {"gap_interval", {cfg.gap.lo, cfg.gap.hi}},
                       {"noisy_interval", {cfg.noisy.lo, cfg.noisy.hi}},
                       {"quiet_interval", {cfg.quiet.lo, cfg.quiet.hi}},
                       {"sigma_quiet", cfg.sigma_quiet},
                       {"sigma_noisy", cfg.sigma_noisy}};
}

Dataset makeSparseNoisySine(std::uint64_t seed, const SparseSineConfig &cfg) {
    cfg.validate();
    Dataset ds;
    ds.seed = seed;
    ds.noise_sigma = cfg.sigma_noisy;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    const double dx = (cfg.x_max - cfg.x_min) / static_cast<double>(cfg.n_grid);
    for (std::size_t i = 0; i < cfg.n_grid; ++i) {
        const double x = cfg.x_min + dx * static_cast<double>(i);
        if (cfg.gap.contains(x)) {
            continue;
        }
        const double sigma =
            cfg.noisy.contains(x) ? cfg.sigma_noisy : cfg.sigma_quiet;
        ds.inputs.push_back(x);
        ds.targets.push_back({std::sin(x) + sigma * noise(rng)});
    }
    ds.metadata = cfg;
    ds.metadata["kind"] = "sparse_noisy_sine";
    ds.metadata["seed"] = seed;
    ds.metadata["n_points"] = ds.inputs.size();
    return ds;
}

} // namespace lrpq
