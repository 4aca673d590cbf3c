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
#include "lrpq/Circuit.hpp"

#include <cmath>

#include "lrpq/Error.hpp"

namespace lrpq {

std::string toString(Entangler e) {
    return e == Entangler::Chain ? "chain" : "ring";
}

Entangler entanglerFromString(const std::string &name) {
    if (name == "chain") {
        return Entangler::Chain;
    }
    if (name == "ring") {
        return Entangler::Ring;
    }
    throw ConfigError("unknown entangler '" + name + "' (chain|ring)");
}

void CircuitSpec::validate() const {
    require<ConfigError>(num_qubits >= 1 && num_qubits <= kMaxQubits,
                         "n_qubits must be in [1, " +
                             std::to_string(kMaxQubits) + "]");
    require<ConfigError>(num_layers >= 1, "n_layers must be >= 1");
}

std::vector<std::pair<std::size_t, std::size_t>>
CircuitSpec::entanglerPairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j + 1 < num_qubits; ++j) {
        pairs.emplace_back(j, j + 1);
    }
    if (entangler == Entangler::Ring && num_qubits > 2) {
        pairs.emplace_back(num_qubits - 1, 0);
    }
    return pairs;
}

void to_json(nlohmann::json &j, const CircuitSpec &spec) {
    j = nlohmann::json{{"n_qubits", spec.num_qubits},
                       {"n_layers", spec.num_layers},
                       {"entangler", toString(spec.entangler)}};
}

void from_json(const nlohmann::json &j, CircuitSpec &spec) {
    require<ConfigError>(j.is_object(), "circuit spec must be a JSON object");
    for (const auto &[key, value] : j.items()) {
        require<ConfigError>(key == "n_qubits" || key == "n_layers" ||
                                 key == "entangler",
                             "unknown circuit spec key '" + key + "'");
    }
    CircuitSpec out;
    out.num_qubits = j.at("n_qubits").get<std::size_t>();
    out.num_layers = j.at("n_layers").get<std::size_t>();
    if (j.contains("entangler")) {
        out.entangler = entanglerFromString(j.at("entangler").get<std::string>());
    }
    out.validate();
    spec = out;
}

ParameterSet::ParameterSet(std::size_t num_layers, std::size_t num_qubits,
                           std::vector<double> values)
    : num_layers_{num_layers}, num_qubits_{num_qubits},
      values_{std::move(values)} {
    require<ConfigError>(values_.size() == 3 * num_layers_ * num_qubits_,
                         "parameter count must equal 3 * layers * qubits");
}

ParameterSet ParameterSet::zeros(const CircuitSpec &spec) {
    return {spec.num_layers, spec.num_qubits,
            std::vector<double>(spec.numParams(), 0.0)};
}

double ParameterSet::at(std::size_t layer, std::size_t qubit,
                        RotationAngle angle) const {
    require<IndexError>(layer < num_layers_ && qubit < num_qubits_,
                        "parameter index out of range");
    return values_[flatIndex(num_qubits_, layer, qubit, angle)];
}

double &ParameterSet::at(std::size_t layer, std::size_t qubit,
                         RotationAngle angle) {
    require<IndexError>(layer < num_layers_ && qubit < num_qubits_,
                        "parameter index out of range");
    return values_[flatIndex(num_qubits_, layer, qubit, angle)];
}

void ParameterSet::checkShape(const CircuitSpec &spec) const {
    require<ConfigError>(num_layers_ == spec.num_layers &&
                             num_qubits_ == spec.num_qubits,
                         "parameter shape [" + std::to_string(num_layers_) +
                             "][" + std::to_string(num_qubits_) +
                             "][3] does not match circuit [" +
                             std::to_string(spec.num_layers) + "][" +
                             std::to_string(spec.num_qubits) + "][3]");
}

void to_json(nlohmann::json &j, const ParameterSet &params) {
    j = nlohmann::json{
        {"shape", {params.numLayers(), params.numQubits(), 3}},
        {"order", "layer, qubit, (phi, theta, omega)"},
        {"values", std::vector<double>(params.values().begin(),
                                       params.values().end())}};
}

void from_json(const nlohmann::json &j, ParameterSet &params) {
    const auto shape = j.at("shape").get<std::vector<std::size_t>>();
    require<ConfigError>(shape.size() == 3 && shape[2] == 3,
                         "parameter shape must be [L, n, 3]");
    params = ParameterSet(shape[0], shape[1],
                          j.at("values").get<std::vector<double>>());
}

Matrix2 rotGate(double phi, double theta, double omega) {
    require<InputError>(std::isfinite(phi) && std::isfinite(theta) &&
                            std::isfinite(omega),
                        "rotation angles must be finite");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const double sum = (phi + omega) / 2;
    const double diff = (phi - omega) / 2;
    return {std::polar(c, -sum), -std::polar(s, diff), std::polar(s, -diff),
            std::polar(c, sum)};
}

void embedInput(StateVector &state, double x) {
    require<InputError>(std::isfinite(x), "input sample must be finite");
    const Matrix2 gate = gates::rx(x);
    for (std::size_t q = 0; q < state.numQubits(); ++q) {
        state.applyGate(gate, q);
    }
}

std::vector<TapeOp> compileTape(const CircuitSpec &spec,
                                const ParameterSet &params, double x) {
    spec.validate();
    params.checkShape(spec);
    require<InputError>(std::isfinite(x), "input sample must be finite");

    const std::size_t n = spec.num_qubits;
    const auto pairs = spec.entanglerPairs();
    std::vector<TapeOp> tape;
    tape.reserve(n + spec.num_layers * (3 * n + pairs.size()));

    for (std::size_t q = 0; q < n; ++q) {
        tape.push_back({TapeOp::Kind::Rx, q, 0, x, -1});
    }
    const auto values = params.values();
    for (std::size_t layer = 0; layer < spec.num_layers; ++layer) {
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t base =
                ParameterSet::flatIndex(n, layer, q, RotationAngle::Phi);
            tape.push_back({TapeOp::Kind::Rz, q, 0, values[base],
                            static_cast<long>(base)});
            tape.push_back({TapeOp::Kind::Ry, q, 0, values[base + 1],
                            static_cast<long>(base + 1)});
            tape.push_back({TapeOp::Kind::Rz, q, 0, values[base + 2],
                            static_cast<long>(base + 2)});
        }
        for (const auto &[control, target] : pairs) {
            tape.push_back({TapeOp::Kind::Cnot, control, target, 0.0, -1});
        }
    }
    return tape;
}

void applyTapeOp(StateVector &state, const TapeOp &op, bool inverse) {
    const double angle = inverse ? -op.angle : op.angle;
    switch (op.kind) {
    case TapeOp::Kind::Rx:
        state.applyGate(gates::rx(angle), op.qubit);
        break;
    case TapeOp::Kind::Ry:
        state.applyGate(gates::ry(angle), op.qubit);
        break;
    case TapeOp::Kind::Rz:
        state.applyGate(gates::rz(angle), op.qubit);
        break;
    case TapeOp::Kind::Cnot:
        state.applyCnot(op.qubit, op.target);
        break;
    }
}

StateVector forward(const CircuitSpec &spec, const ParameterSet &params,
                    double x) {
    const auto tape = compileTape(spec, params, x);
    StateVector state(spec.num_qubits);
    for (const auto &op : tape) {
        applyTapeOp(state, op);
    }
    return state;
}

} // namespace lrpq
