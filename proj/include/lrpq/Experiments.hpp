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
 * @file Experiments.hpp
 * Harnesses for the gradient-variance depth scan, Hessian-plane loss
 * landscapes, multi-output regression ensembles, deep-ensemble uncertainty
 * decomposition, and the shot-noise scaling scan.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lrpq/Autodiff.hpp"
#include "lrpq/Circuit.hpp"
#include "lrpq/Datasets.hpp"
#include "lrpq/Training.hpp"

namespace lrpq {

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> a, std::span<const double> b);

/// Population variance (divides by N); 0 for a single value.
double populationVariance(std::span<const double> values);

// ---------------------------------------------------------------------------
// Gradient-variance depth scan

struct VarianceScanConfig {
    std::size_t num_qubits{4};
    std::vector<std::size_t> depths{2, 4, 6, 8, 10, 12, 14, 16};
    std::size_t num_seeds{5};
    std::size_t num_ensembles{100};
    Head head{Head::Pauli};
    Entangler entangler{Entangler::Chain};
    /// Fixed probe sample; the target is 0 for every used output.
    double probe_x{0.5};
    /// Flat index of the differentiated parameter.
    std::size_t param_index{0};
    std::uint64_t seed{0};
    double clamp_eps{kDefaultClampEps};

    void validate() const;
};

void to_json(nlohmann::json &j, const VarianceScanConfig &cfg);

struct VarianceCell {
    std::size_t depth;
    std::uint64_t seed;
    std::size_t num_samples;
    double mean;
    double variance;
};

struct VarianceScanReport {
    VarianceScanConfig config;
    /// Seed-major, depth-minor.
    std::vector<VarianceCell> cells;

    /// Variances across depths for seed slot `s`.
    [[nodiscard]] std::vector<double> variancesForSeed(std::size_t s) const;
};

/// The probe sample used by the scan for `head` on `num_qubits` qubits.
Sample varianceProbe(Head head, std::size_t num_qubits, double x);

VarianceScanReport varianceScan(const VarianceScanConfig &cfg,
                                std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Loss landscape on the top-two Hessian eigenvector plane

struct LandscapeConfig {
    CircuitSpec spec{2, 4, Entangler::Chain};
    Head head{Head::Pauli};
    double half_width{std::numbers::pi};
    std::size_t resolution{51};
    double probe_x{0.5};
    std::uint64_t seed{0};
    /// Adam epochs on the probe sample before taking the Hessian.
    std::size_t warmup_epochs{20};
    double hessian_step{kDefaultHessianStep};
    double clamp_eps{kDefaultClampEps};

    void validate() const;
};

void to_json(nlohmann::json &j, const LandscapeConfig &cfg);

struct LandscapeReport {
    LandscapeConfig config;
    /// Shared grid coordinates for both axes.
    std::vector<double> coords;
    /// surface[a * resolution + b] at reference + coords[a] v1 + coords[b] v2.
    std::vector<double> surface;
    ParameterSet reference;
    double reference_loss{0.0};
    HessianDirections directions;

    [[nodiscard]] double at(std::size_t a, std::size_t b) const {
        return surface[a * coords.size() + b];
    }
    [[nodiscard]] double maxLoss() const;
};

/// Uses `reference` if given, else a seeded warm-up run on the probe sample.
LandscapeReport lossLandscape(const LandscapeConfig &cfg,
                              const std::optional<ParameterSet> &reference =
                                  std::nullopt,
                              std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Multi-output regression

struct RegressionConfig {
    std::size_t num_outputs{3};
    Head head{Head::Lrp};
    CircuitSpec spec{2, 3, Entangler::Chain};
    TrainConfig train{};
    std::size_t num_points{100};
    double x_min{0.0};
    double x_max{2.0 * std::numbers::pi};
    double noise_sigma{0.1};
    /// Dataset noise seed; fixed across heads so paired runs share data.
    std::uint64_t data_seed{0};
    std::size_t ensemble{10};
    std::size_t grid_points{200};
    double clamp_eps{kDefaultClampEps};

    void validate() const;
};

void to_json(nlohmann::json &j, const RegressionConfig &cfg);

struct RegressionReport {
    RegressionConfig config;
    Dataset dataset;
    EnsembleResult ensemble;
    std::vector<double> grid;
    /// predictions[member][grid][output]
    std::vector<std::vector<std::vector<double>>> predictions;
    /// [grid][output]
    std::vector<std::vector<double>> mean;
    std::vector<std::vector<double>> stddev;
    /// Training-set MSE of each member with its final parameters.
    std::vector<double> final_mse;

    [[nodiscard]] double meanFinalMse() const;
};

RegressionReport regressionExperiment(const RegressionConfig &cfg,
                                      std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Deep-ensemble uncertainty

struct UqConfig {
    CircuitSpec spec{2, 3, Entangler::Chain};
    TrainConfig train{0.1, 64, 200, 0};
    SparseSineConfig data{};
    std::uint64_t data_seed{0};
    std::size_t ensemble{10};
    std::size_t grid_points{200};
    GaussianIndices indices{};
    double clamp_eps{kDefaultClampEps};

    void validate() const;
};

void to_json(nlohmann::json &j, const UqConfig &cfg);

struct UncertaintyPoint {
    double x;
    double mean;
    double aleatoric;
    double epistemic;
    double total;
};

struct UqReport {
    UqConfig config;
    Dataset dataset;
    EnsembleResult ensemble;
    std::vector<double> grid;
    /// mu[member][grid], variance[member][grid]
    std::vector<std::vector<double>> mu;
    std::vector<std::vector<double>> variance;
    std::vector<bool> excluded;
    std::vector<UncertaintyPoint> decomposition;
    std::vector<std::string> warnings;

    /// Average of a decomposition field over grid points inside `range`.
    [[nodiscard]] double meanOver(const Interval &range,
                                  double UncertaintyPoint::*field) const;
};

/// Aleatoric = mean of sigma^2, epistemic = population variance of mu.
UncertaintyPoint decomposeUncertainty(double x, std::span<const double> mus,
                                      std::span<const double> variances);

UqReport uqExperiment(const UqConfig &cfg, std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Shot noise

/// Multinomial draw of `n_shots` outcomes; counts sum to n_shots.
std::vector<std::uint64_t> sampleShots(std::span<const double> probs,
                                       std::uint64_t n_shots,
                                       std::mt19937_64 &rng);
std::vector<std::uint64_t> sampleShots(std::span<const double> probs,
                                       std::uint64_t n_shots,
                                       std::uint64_t seed);

/// log(c_i / c_last) with zero counts replaced by `pseudo_count`.
std::vector<double> lrpFromCounts(std::span<const std::uint64_t> counts,
                                  double pseudo_count = 0.5);

struct ShotNoiseConfig {
    std::vector<std::size_t> qubits{2, 3, 4};
    std::vector<std::uint64_t> shots{1000, 10000, 100000};
    std::size_t repeats{1000};
    std::uint64_t seed{0};
    double pseudo_count{0.5};

    void validate() const;
};

void to_json(nlohmann::json &j, const ShotNoiseConfig &cfg);

struct ShotNoiseCell {
    std::size_t num_qubits;
    std::uint64_t shots;
    std::size_t output_index;
    double empirical_variance;
    /// 2 * 2^n / N
    double predicted_variance;
    bool under_sampled;
};

struct ShotNoiseReport {
    ShotNoiseConfig config;
    std::vector<ShotNoiseCell> cells;

    [[nodiscard]] const ShotNoiseCell &cell(std::size_t num_qubits,
                                            std::uint64_t shots,
                                            std::size_t output_index) const;
};

/// Ry(pi/2) on every qubit: p_i = 2^-n for all i.
StateVector balancedState(std::size_t num_qubits);

ShotNoiseReport shotNoiseScan(const ShotNoiseConfig &cfg,
                              std::size_t jobs = 1);

} // namespace lrpq
