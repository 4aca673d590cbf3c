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
#include "lrpq/Autodiff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lrpq/Error.hpp"

namespace lrpq {

void Objective::check(const CircuitSpec &spec, const Sample &sample) const {
    const std::size_t available = numOutputs(head, spec.num_qubits);
    if (loss == LossKind::Mse) {
        require<ConfigError>(!sample.target.empty() &&
                                 sample.target.size() <= available,
                             "MSE target length " +
                                 std::to_string(sample.target.size()) +
                                 " incompatible with " +
                                 std::to_string(available) + " " +
                                 toString(head) + " outputs");
    } else {
        require<ConfigError>(sample.target.size() == 1,
                             "NLL target must be a single value");
        require<ConfigError>(gaussian.mean != gaussian.log_variance,
                             "mean and log-variance indices must differ");
        require<ConfigError>(gaussian.mean < available &&
                                 gaussian.log_variance < available,
                             "Gaussian output indices exceed the " +
                                 std::to_string(available) + " " +
                                 toString(head) + " outputs");
    }
}

std::vector<double> headOutputs(const Objective &objective,
                                std::span<const double> probs,
                                std::size_t num_qubits) {
    if (objective.head == Head::Lrp) {
        return lrpOutputs(probs, objective.clamp_eps).values;
    }
    return pauliOutputs(probs, num_qubits).values;
}

namespace {

/// Loss of one sample and its gradient with respect to the head outputs.
LossAndGradient lossAndOutputGradient(const Objective &objective,
                                      std::span<const double> probs,
                                      std::size_t num_qubits,
                                      const Sample &sample) {
    const auto outputs = headOutputs(objective, probs, num_qubits);
    LossAndGradient out{};
    if (objective.loss == LossKind::Mse) {
        const auto used = std::span<const double>(outputs).first(
            sample.target.size());
        out.loss = mse(used, sample.target);
        out.gradient = mseGradient(used, sample.target);
    } else {
        const auto pred = toGaussian(outputs, objective.gaussian,
                                     objective.clamp_eps);
        out.loss = gaussianNll(pred, sample.target[0]);
        const auto [d_mu, d_logvar] = gaussianNllGradient(
            outputs[objective.gaussian.mean],
            outputs[objective.gaussian.log_variance], sample.target[0]);
        out.gradient.assign(std::max(objective.gaussian.mean,
                                     objective.gaussian.log_variance) +
                                1,
                            0.0);
        out.gradient[objective.gaussian.mean] = d_mu;
        out.gradient[objective.gaussian.log_variance] = d_logvar;
    }
    out.loss *= objective.scale;
    for (double &g : out.gradient) {
        g *= objective.scale;
    }
    return out;
}

Matrix2 generatorOf(TapeOp::Kind kind) {
    return kind == TapeOp::Kind::Ry ? gates::pauliY() : gates::pauliZ();
}

/**
 * Reverse sweep: given the final state and the diagonal observable weights
 * dL/dp_i, accumulate dL/dtheta into `grad`. Each trainable gate is
 * exp(-i a G / 2), so its contribution is Im <lambda|G|psi> evaluated just
 * after the gate.
 */
void adjointSweep(const std::vector<TapeOp> &tape, StateVector psi,
                  std::span<const double> weights, std::span<double> grad) {
    StateVector lambda = psi;
    lambda.scaleDiagonal(weights);

    std::size_t first_trainable = tape.size();
    for (std::size_t k = 0; k < tape.size(); ++k) {
        if (tape[k].param_index >= 0) {
            first_trainable = k;
            break;
        }
    }
    for (std::size_t k = tape.size(); k-- > first_trainable;) {
        const TapeOp &op = tape[k];
        if (op.param_index >= 0) {
            const Complex z = psi.braket(lambda, generatorOf(op.kind), op.qubit);
            grad[static_cast<std::size_t>(op.param_index)] += z.imag();
        }
        if (k > first_trainable) {
            applyTapeOp(psi, op, true);
            applyTapeOp(lambda, op, true);
        }
    }
}

void requireFinite(double value, const char *what) {
    require<NumericError>(std::isfinite(value),
                          std::string("non-finite ") + what);
}

} // namespace

double lossFromProbabilities(const Objective &objective,
                             std::span<const double> probs,
                             std::size_t num_qubits, const Sample &sample) {
    const auto outputs = headOutputs(objective, probs, num_qubits);
    double value = 0.0;
    if (objective.loss == LossKind::Mse) {
        value = mse(std::span<const double>(outputs).first(sample.target.size()),
                    sample.target);
    } else {
        value = gaussianNll(
            toGaussian(outputs, objective.gaussian, objective.clamp_eps),
            sample.target[0]);
    }
    return objective.scale * value;
}

double sampleLoss(const CircuitSpec &spec, const ParameterSet &params,
                  const Sample &sample, const Objective &objective) {
    objective.check(spec, sample);
    const auto probs = forward(spec, params, sample.x).probabilities();
    return lossFromProbabilities(objective, probs, spec.num_qubits, sample);
}

double batchLoss(const CircuitSpec &spec, const ParameterSet &params,
                 std::span<const Sample> batch, const Objective &objective) {
    require<InputError>(!batch.empty(), "batch must be non-empty");
    double acc = 0.0;
    for (const auto &sample : batch) {
        acc += sampleLoss(spec, params, sample, objective);
    }
    const double value = acc / static_cast<double>(batch.size());
    requireFinite(value, "loss");
    return value;
}

LossAndGradient lossAndGradient(const CircuitSpec &spec,
                                const ParameterSet &params,
                                std::span<const Sample> batch,
                                const Objective &objective) {
    require<InputError>(!batch.empty(), "batch must be non-empty");
    params.checkShape(spec);
    LossAndGradient total{0.0, GradientVector(spec.numParams(), 0.0)};

    for (const auto &sample : batch) {
        objective.check(spec, sample);
        const auto tape = compileTape(spec, params, sample.x);
        StateVector psi(spec.num_qubits);
        for (const auto &op : tape) {
            applyTapeOp(psi, op);
        }
        const auto probs = psi.probabilities();
        const auto local =
            lossAndOutputGradient(objective, probs, spec.num_qubits, sample);
        const auto weights =
            pullbackToProbabilities(objective.head, probs, spec.num_qubits,
                                    local.gradient, objective.clamp_eps);
        total.loss += local.loss;
        adjointSweep(tape, std::move(psi), weights, total.gradient);
    }

    const double inv = 1.0 / static_cast<double>(batch.size());
    total.loss *= inv;
    requireFinite(total.loss, "loss");
    for (double &g : total.gradient) {
        g *= inv;
        requireFinite(g, "gradient");
    }
    return total;
}

GradientVector lossGradient(const CircuitSpec &spec,
                            const ParameterSet &params,
                            std::span<const Sample> batch,
                            const Objective &objective) {
    return lossAndGradient(spec, params, batch, objective).gradient;
}

std::vector<double> probabilityJacobian(const CircuitSpec &spec,
                                        const ParameterSet &params, double x) {
    const auto tape = compileTape(spec, params, x);
    StateVector psi(spec.num_qubits);
    for (const auto &op : tape) {
        applyTapeOp(psi, op);
    }
    const std::size_t dim = psi.size();
    const std::size_t d = spec.numParams();
    std::vector<double> jac(dim * d, 0.0);
    std::vector<double> weights(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        weights.assign(dim, 0.0);
        weights[i] = 1.0;
        adjointSweep(tape, psi, weights,
                     std::span<double>(jac).subspan(i * d, d));
    }
    return jac;
}

std::vector<double> finiteDiffGradient(const ScalarFunction &f,
                                       std::span<const double> point,
                                       double step) {
    require<ConfigError>(step >= 1e-7 && step <= 1e-3,
                         "finite-difference step must lie in [1e-7, 1e-3]");
    std::vector<double> probe(point.begin(), point.end());
    std::vector<double> grad(point.size());
    for (std::size_t j = 0; j < point.size(); ++j) {
        probe[j] = point[j] + step;
        const double up = f(probe);
        probe[j] = point[j] - step;
        const double down = f(probe);
        probe[j] = point[j];
        grad[j] = (up - down) / (2.0 * step);
    }
    return grad;
}

GradientVector finiteDiffGradient(const CircuitSpec &spec,
                                  const ParameterSet &params,
                                  std::span<const Sample> batch,
                                  const Objective &objective, double step) {
    params.checkShape(spec);
    const ScalarFunction f = [&](std::span<const double> theta) {
        ParameterSet shifted(spec.num_layers, spec.num_qubits,
                             {theta.begin(), theta.end()});
        return batchLoss(spec, shifted, batch, objective);
    };
    return finiteDiffGradient(f, params.values(), step);
}

HessianMatrix hessian(const GradientFunction &gradient,
                      std::span<const double> point, double step) {
    const std::size_t d = point.size();
    require<ConfigError>(d >= 1 && d <= kMaxHessianDim,
                         "Hessian dimension " + std::to_string(d) +
                             " exceeds the ceiling of " +
                             std::to_string(kMaxHessianDim));
    require<ConfigError>(step > 0.0, "Hessian step must be positive");

    HessianMatrix h{d, std::vector<double>(d * d, 0.0), 0.0};
    // Fourth-order central stencil in each coordinate of the gradient.
    std::vector<double> probe(point.begin(), point.end());
    const auto shifted = [&](std::size_t i, double offset) {
        probe[i] = point[i] + offset;
        auto g = gradient(probe);
        probe[i] = point[i];
        require<ConfigError>(g.size() == d, "gradient length mismatch");
        return g;
    };
    for (std::size_t i = 0; i < d; ++i) {
        const auto up2 = shifted(i, 2.0 * step);
        const auto up = shifted(i, step);
        const auto down = shifted(i, -step);
        const auto down2 = shifted(i, -2.0 * step);
        for (std::size_t j = 0; j < d; ++j) {
            h.values[i * d + j] =
                (-up2[j] + 8.0 * up[j] - 8.0 * down[j] + down2[j]) /
                (12.0 * step);
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const double a = h.values[i * d + j];
            const double b = h.values[j * d + i];
            h.max_asymmetry = std::max(h.max_asymmetry, std::abs(a - b));
            h.values[i * d + j] = h.values[j * d + i] = 0.5 * (a + b);
        }
    }
    return h;
}

HessianMatrix hessian(const CircuitSpec &spec, const ParameterSet &params,
                      std::span<const Sample> batch,
                      const Objective &objective, double step) {
    params.checkShape(spec);
    const GradientFunction grad = [&](std::span<const double> theta) {
        ParameterSet shifted(spec.num_layers, spec.num_qubits,
                             {theta.begin(), theta.end()});
        return lossGradient(spec, shifted, batch, objective);
    };
    return hessian(grad, params.values(), step);
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> decompose(const HessianMatrix &h) {
    require<ConfigError>(h.dim >= 1 && h.values.size() == h.dim * h.dim,
                         "malformed Hessian");
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                         Eigen::Dynamic, Eigen::RowMajor>>
        m(h.values.data(), static_cast<Eigen::Index>(h.dim),
          static_cast<Eigen::Index>(h.dim));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    require<NumericError>(solver.info() == Eigen::Success,
                          "Hessian eigendecomposition failed");
    return solver;
}

std::vector<double> canonicalSign(const Eigen::VectorXd &v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    for (double c : out) {
        if (std::abs(c) > 1e-12) {
            if (c < 0.0) {
                for (double &x : out) {
                    x = -x;
                }
            }
            break;
        }
    }
    return out;
}

} // namespace

HessianDirections topHessianDirections(const HessianMatrix &h) {
    require<ConfigError>(h.dim >= 2, "need at least two dimensions");
    const auto solver = decompose(h);
    const auto &evals = solver.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(evals.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = static_cast<Eigen::Index>(k);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         return std::abs(evals[a]) > std::abs(evals[b]);
                     });

    constexpr double kGap = 1e-10;
    HessianDirections out;
    out.first_eigenvalue = evals[order[0]];
    out.second_eigenvalue = evals[order[1]];
    out.first = canonicalSign(solver.eigenvectors().col(order[0]));
    out.second = canonicalSign(solver.eigenvectors().col(order[1]));
    const double top = std::abs(evals[order[0]]);
    const double next = std::abs(evals[order[1]]);
    out.degenerate = top - next < kGap;
    if (order.size() > 2) {
        out.degenerate =
            out.degenerate || next - std::abs(evals[order[2]]) < kGap;
    }
    return out;
}

std::vector<double> hessianEigenvalues(const HessianMatrix &h) {
    const auto solver = decompose(h);
    const auto &evals = solver.eigenvalues();
    return {evals.data(), evals.data() + evals.size()};
}

} // namespace lrpq
