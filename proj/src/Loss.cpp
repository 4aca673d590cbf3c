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
#include "lrpq/Loss.hpp"

#include <cmath>
#include <numbers>

#include "lrpq/Error.hpp"

namespace lrpq {

std::string toString(LossKind kind) {
    return kind == LossKind::Mse ? "mse" : "nll";
}

LossKind lossKindFromString(const std::string &name) {
    if (name == "mse") {
        return LossKind::Mse;
    }
    if (name == "nll") {
        return LossKind::Nll;
    }
    throw ConfigError("unknown loss '" + name + "' (mse|nll)");
}

double mse(std::span<const double> yhat, std::span<const double> ytrue) {
    require<InputError>(yhat.size() == ytrue.size(),
                        "mse: prediction and target lengths differ (" +
                            std::to_string(yhat.size()) + " vs " +
                            std::to_string(ytrue.size()) + ")");
    require<InputError>(!yhat.empty(), "mse: empty vectors");
    double acc = 0.0;
    for (std::size_t i = 0; i < yhat.size(); ++i) {
        const double r = yhat[i] - ytrue[i];
        acc += r * r;
    }
    return acc / static_cast<double>(yhat.size());
}

std::vector<double> mseGradient(std::span<const double> yhat,
                                std::span<const double> ytrue) {
    require<InputError>(yhat.size() == ytrue.size() && !yhat.empty(),
                        "mse: prediction and target lengths differ");
    const double scale = 2.0 / static_cast<double>(yhat.size());
    std::vector<double> grad(yhat.size());
    for (std::size_t i = 0; i < yhat.size(); ++i) {
        grad[i] = scale * (yhat[i] - ytrue[i]);
    }
    return grad;
}

double batchMean(std::span<const double> per_sample) {
    require<InputError>(!per_sample.empty(), "cannot average an empty batch");
    double acc = 0.0;
    for (double v : per_sample) {
        acc += v;
    }
    return acc / static_cast<double>(per_sample.size());
}

GaussianPrediction toGaussian(std::span<const double> yhat,
                              GaussianIndices indices, double eps) {
    require<ConfigError>(indices.mean != indices.log_variance,
                         "mean and log-variance indices must differ");
    require<IndexError>(indices.mean < yhat.size() &&
                            indices.log_variance < yhat.size(),
                        "Gaussian output index out of range");
    const double log_var = yhat[indices.log_variance];
    const double ceiling = std::log(1.0 / eps);
    return {yhat[indices.mean], std::exp(0.5 * log_var),
            std::abs(log_var) >= 0.99 * ceiling};
}

double gaussianNll(const GaussianPrediction &pred, double y) {
    require<InputError>(pred.sigma > 0.0, "sigma must be positive");
    const double var = pred.sigma * pred.sigma;
    const double r = y - pred.mu;
    return 0.5 * std::log(2.0 * std::numbers::pi * var) + r * r / (2.0 * var);
}

std::pair<double, double> gaussianNllGradient(double mu, double log_variance,
                                              double y) {
    const double inv_var = std::exp(-log_variance);
    const double r = y - mu;
    return {-r * inv_var, 0.5 - 0.5 * r * r * inv_var};
}

} // namespace lrpq
