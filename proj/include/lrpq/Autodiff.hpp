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
 * @file Autodiff.hpp
 * Exact adjoint gradients of batch losses with respect to circuit angles,
 * a central finite-difference oracle, and a finite-difference Hessian.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lrpq/Circuit.hpp"
#include "lrpq/Loss.hpp"
#include "lrpq/Outputs.hpp"

namespace lrpq {

/// One training pair. For MSE the target holds one value per used output;
/// for NLL it holds the scalar observation.
struct Sample {
    double x;
    std::vector<double> target;
};

/// Head, loss, and their options; everything needed to score a sample.
struct Objective {
    Head head{Head::Lrp};
    LossKind loss{LossKind::Mse};
    double clamp_eps{kDefaultClampEps};
    GaussianIndices gaussian{};
    /// Multiplies the loss (and therefore the gradient).
    double scale{1.0};

    /// Throws ConfigError if `sample` cannot be scored on `spec`.
    void check(const CircuitSpec &spec, const Sample &sample) const;
};

/// Head outputs of a probability vector under `objective`.
std::vector<double> headOutputs(const Objective &objective,
                                std::span<const double> probs,
                                std::size_t num_qubits);

/// Loss of one sample given the probabilities it produced.
double lossFromProbabilities(const Objective &objective,
                             std::span<const double> probs,
                             std::size_t num_qubits, const Sample &sample);

double sampleLoss(const CircuitSpec &spec, const ParameterSet &params,
                  const Sample &sample, const Objective &objective);

/// Arithmetic mean of sampleLoss over the batch.
double batchLoss(const CircuitSpec &spec, const ParameterSet &params,
                 std::span<const Sample> batch, const Objective &objective);

/// Flat gradient, ordered like ParameterSet::values().
using GradientVector = std::vector<double>;

struct LossAndGradient {
    double loss;
    GradientVector gradient;
};

/**
 * @brief Exact gradient of the mean batch loss by one adjoint sweep per
 * sample.
 *
 * Throws NumericError if the loss or any gradient component is not finite.
 */
LossAndGradient lossAndGradient(const CircuitSpec &spec,
                                const ParameterSet &params,
                                std::span<const Sample> batch,
                                const Objective &objective);

GradientVector lossGradient(const CircuitSpec &spec,
                            const ParameterSet &params,
                            std::span<const Sample> batch,
                            const Objective &objective);

/**
 * @brief dp_i / dtheta_j for one input, row-major [2^n][num_params].
 *
 * Computed with one adjoint sweep per basis state.
 */
std::vector<double> probabilityJacobian(const CircuitSpec &spec,
                                        const ParameterSet &params, double x);

using ScalarFunction = std::function<double(std::span<const double>)>;
using GradientFunction =
    std::function<std::vector<double>(std::span<const double>)>;

/// Central differences (f(p + h e_j) - f(p - h e_j)) / 2h; step in [1e-7, 1e-3].
std::vector<double> finiteDiffGradient(const ScalarFunction &f,
                                       std::span<const double> point,
                                       double step);

GradientVector finiteDiffGradient(const CircuitSpec &spec,
                                  const ParameterSet &params,
                                  std::span<const Sample> batch,
                                  const Objective &objective, double step);

inline constexpr std::size_t kMaxHessianDim = 200;
inline constexpr double kDefaultHessianStep = 1e-3;

struct HessianMatrix {
    std::size_t dim{0};
    /// Row-major, symmetrized.
    std::vector<double> values;
    /// max_ij |H_ij - H_ji| before symmetrization.
    double max_asymmetry{0.0};

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return values[i * dim + j];
    }
};

/// Central differences of `gradient`, then H <- (H + H^T) / 2.
HessianMatrix hessian(const GradientFunction &gradient,
                      std::span<const double> point,
                      double step = kDefaultHessianStep);

HessianMatrix hessian(const CircuitSpec &spec, const ParameterSet &params,
                      std::span<const Sample> batch,
                      const Objective &objective,
                      double step = kDefaultHessianStep);

struct HessianDirections {
    std::vector<double> first;
    std::vector<double> second;
    double first_eigenvalue{0.0};
    double second_eigenvalue{0.0};
    /// Top eigenvalue magnitudes are not separated by more than 1e-10.
    bool degenerate{false};
};

/**
 * @brief Orthonormal eigenvectors of the two largest-magnitude eigenvalues.
 *
 * Signs are fixed so the first nonzero component of each vector is positive.
 */
HessianDirections topHessianDirections(const HessianMatrix &h);

/// All eigenvalues in ascending order.
std::vector<double> hessianEigenvalues(const HessianMatrix &h);

} // namespace lrpq
