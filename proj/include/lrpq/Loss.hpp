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
 * @file Loss.hpp
 * Training objectives: mean squared error over output components and a
 * Gaussian negative log-likelihood for mean/log-variance outputs.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrpq/Outputs.hpp"

namespace lrpq {

enum class LossKind { Mse, Nll };

std::string toString(LossKind kind);
LossKind lossKindFromString(const std::string &name);

/// Mean over components of (yhat_i - ytrue_i)^2; lengths must match.
double mse(std::span<const double> yhat, std::span<const double> ytrue);

/// d mse / d yhat
std::vector<double> mseGradient(std::span<const double> yhat,
                                std::span<const double> ytrue);

/// Arithmetic mean, the batch reduction for every loss.
double batchMean(std::span<const double> per_sample);

/// Which outputs feed the Gaussian mean and log-variance.
struct GaussianIndices {
    std::size_t mean{0};
    std::size_t log_variance{1};
};

struct GaussianPrediction {
    double mu;
    double sigma;
    /// The log-variance output sits at the LRP clamp ceiling.
    bool saturated{false};
};

/**
 * @brief mu = yhat[mean], sigma^2 = exp(yhat[log_variance]).
 *
 * `saturated` is set when |log-variance| is within 1% of the clamp ceiling
 * log(1/eps).
 */
GaussianPrediction toGaussian(std::span<const double> yhat,
                              GaussianIndices indices = {},
                              double eps = kDefaultClampEps);

/// 0.5 log(2 pi sigma^2) + (y - mu)^2 / (2 sigma^2)
double gaussianNll(const GaussianPrediction &pred, double y);

/// Gradient of the NLL with respect to (mu, log sigma^2).
std::pair<double, double> gaussianNllGradient(double mu, double log_variance,
                                              double y);

} // namespace lrpq
