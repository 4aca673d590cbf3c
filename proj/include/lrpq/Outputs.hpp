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
 * @file Outputs.hpp
 * Output heads: log-ratio probabilities over the basis states and per-qubit
 * Pauli-Z expectations.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrpq/StateVector.hpp"

namespace lrpq {

enum class Head { Pauli, Lrp };

std::string toString(Head head);
Head headFromString(const std::string &name);

/// Probabilities below this are clamped before taking logs.
inline constexpr double kDefaultClampEps = 1e-12;

struct OutputVector {
    Head mode;
    std::vector<double> values;
};

/**
 * @brief y_i = log(max(p_i, eps) / max(p_last, eps)) for i = 0..2^n-2.
 *
 * The highest-index basis state is the reference. Requires eps in (0, 1e-6].
 */
OutputVector lrpOutputs(std::span<const double> probs,
                        double eps = kDefaultClampEps);

/// Softmax-style inverse of lrpOutputs with the reference logit fixed at 0.
std::vector<double> lrpInverse(std::span<const double> lrp);

/// Entry j is <Z_j> for every qubit.
OutputVector pauliOutputs(const StateVector &state);

/// Same as above computed from a probability vector on `num_qubits` qubits.
OutputVector pauliOutputs(std::span<const double> probs,
                          std::size_t num_qubits);

/// Number of outputs a head exposes on `num_qubits` qubits.
std::size_t numOutputs(Head head, std::size_t num_qubits);

/**
 * @brief Pull a gradient with respect to the head outputs back to the
 * probabilities.
 *
 * `d_outputs` may be shorter than the full output vector; missing trailing
 * entries are treated as zero. For the LRP head a clamped probability
 * (p <= eps) contributes nothing.
 */
std::vector<double> pullbackToProbabilities(Head head,
                                            std::span<const double> probs,
                                            std::size_t num_qubits,
                                            std::span<const double> d_outputs,
                                            double eps = kDefaultClampEps);

} // namespace lrpq
