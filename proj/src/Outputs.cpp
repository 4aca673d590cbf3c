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
#include "lrpq/Outputs.hpp"

#include <algorithm>
#include <cmath>

#include "lrpq/Error.hpp"

namespace lrpq {

std::string toString(Head head) {
    return head == Head::Pauli ? "pauli" : "lrp";
}

Head headFromString(const std::string &name) {
    if (name == "pauli") {
        return Head::Pauli;
    }
    if (name == "lrp") {
        return Head::Lrp;
    }
    throw ConfigError("unknown head '" + name + "' (pauli|lrp)");
}

namespace {

void checkEps(double eps) {
    require<ConfigError>(eps > 0.0 && eps <= 1e-6,
                         "clamp eps must lie in (0, 1e-6]");
}

void checkProbabilities(std::span<const double> probs) {
    const std::size_t len = probs.size();
    require<ConfigError>(len >= 2 && (len & (len - 1)) == 0,
                         "probability vector length must be 2^n, n >= 1");
}

} // namespace

OutputVector lrpOutputs(std::span<const double> probs, double eps) {
    checkEps(eps);
    checkProbabilities(probs);
    const double log_ref = std::log(std::max(probs.back(), eps));
    OutputVector out{Head::Lrp, std::vector<double>(probs.size() - 1)};
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        out.values[i] = std::log(std::max(probs[i], eps)) - log_ref;
    }
    return out;
}

std::vector<double> lrpInverse(std::span<const double> lrp) {
    require<ConfigError>(!lrp.empty(), "LRP vector must be non-empty");
    // The reference state has logit 0; shift by the max logit before
    // exponentiating.
    double shift = 0.0;
    for (double y : lrp) {
        require<InputError>(std::isfinite(y), "LRP values must be finite");
        shift = std::max(shift, y);
    }
    std::vector<double> probs(lrp.size() + 1);
    double total = 0.0;
    for (std::size_t i = 0; i < lrp.size(); ++i) {
        probs[i] = std::exp(lrp[i] - shift);
        total += probs[i];
    }
    probs.back() = std::exp(-shift);
    total += probs.back();
    for (double &p : probs) {
        p /= total;
    }
    return probs;
}

OutputVector pauliOutputs(const StateVector &state) {
    OutputVector out{Head::Pauli, std::vector<double>(state.numQubits())};
    for (std::size_t q = 0; q < state.numQubits(); ++q) {
        out.values[q] = state.expectationZ(q);
    }
    return out;
}

OutputVector pauliOutputs(std::span<const double> probs,
                          std::size_t num_qubits) {
    require<ConfigError>(probs.size() == (std::size_t{1} << num_qubits),
                         "probability vector length must be 2^n");
    OutputVector out{Head::Pauli, std::vector<double>(num_qubits, 0.0)};
    for (std::size_t q = 0; q < num_qubits; ++q) {
        const std::size_t mask = std::size_t{1} << (num_qubits - 1 - q);
        double value = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            value += (i & mask) == 0 ? probs[i] : -probs[i];
        }
        out.values[q] = value;
    }
    return out;
}

std::size_t numOutputs(Head head, std::size_t num_qubits) {
    return head == Head::Pauli ? num_qubits
                               : (std::size_t{1} << num_qubits) - 1;
}

std::vector<double> pullbackToProbabilities(Head head,
                                            std::span<const double> probs,
                                            std::size_t num_qubits,
                                            std::span<const double> d_outputs,
                                            double eps) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    require<ConfigError>(probs.size() == dim,
                         "probability vector length must be 2^n");
    require<ConfigError>(d_outputs.size() <= numOutputs(head, num_qubits),
                         "more output gradients than head outputs");
    std::vector<double> d_probs(dim, 0.0);

    if (head == Head::Pauli) {
        for (std::size_t q = 0; q < d_outputs.size(); ++q) {
            const std::size_t mask = std::size_t{1} << (num_qubits - 1 - q);
            for (std::size_t i = 0; i < dim; ++i) {
                d_probs[i] += (i & mask) == 0 ? d_outputs[q] : -d_outputs[q];
            }
        }
        return d_probs;
    }

    checkEps(eps);
    double d_ref = 0.0;
    for (std::size_t i = 0; i < d_outputs.size(); ++i) {
        if (probs[i] > eps) {
            d_probs[i] = d_outputs[i] / probs[i];
        }
        d_ref -= d_outputs[i];
    }
    if (probs.back() > eps) {
        d_probs.back() = d_ref / probs.back();
    }
    return d_probs;
}

} // namespace lrpq
