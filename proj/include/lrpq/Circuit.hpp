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
 * @file Circuit.hpp
 * Layered PQC: Rx angle embedding of a scalar input followed by L layers of
 * per-qubit Rz-Ry-Rz rotations and a CNOT entangler.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrpq/StateVector.hpp"

namespace lrpq {

enum class Entangler {
    Chain, ///< CNOT(j, j+1) for j = 0..n-2
    Ring,  ///< chain plus CNOT(n-1, 0) when n > 2
};

std::string toString(Entangler e);
Entangler entanglerFromString(const std::string &name);

struct CircuitSpec {
    std::size_t num_qubits{2};
    std::size_t num_layers{3};
    Entangler entangler{Entangler::Chain};

    /// Throws ConfigError if the spec cannot be built.
    void validate() const;

    /// Flat parameter count, 3 * layers * qubits.
    [[nodiscard]] std::size_t numParams() const {
        return 3 * num_layers * num_qubits;
    }

    /// Ordered (control, target) pairs of one entangler layer.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
    entanglerPairs() const;

    bool operator==(const CircuitSpec &) const = default;
};

void to_json(nlohmann::json &j, const CircuitSpec &spec);
void from_json(const nlohmann::json &j, CircuitSpec &spec);

/// Angle slot inside one rotation gate, in application order.
enum class RotationAngle : std::size_t {
    Phi = 0,   ///< first Rz
    Theta = 1, ///< Ry
    Omega = 2, ///< last Rz
};

/**
 * @brief Trainable angles of a circuit, stored flat.
 *
 * Flat index of (layer, qubit, angle) is (layer * num_qubits + qubit) * 3 +
 * angle, with angle order (phi, theta, omega).
 */
class ParameterSet {
  public:
    ParameterSet() = default;
    ParameterSet(std::size_t num_layers, std::size_t num_qubits,
                 std::vector<double> values);
    static ParameterSet zeros(const CircuitSpec &spec);

    [[nodiscard]] std::size_t numLayers() const { return num_layers_; }
    [[nodiscard]] std::size_t numQubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    [[nodiscard]] static std::size_t flatIndex(std::size_t num_qubits,
                                               std::size_t layer,
                                               std::size_t qubit,
                                               RotationAngle angle) {
        return (layer * num_qubits + qubit) * 3 +
               static_cast<std::size_t>(angle);
    }

    [[nodiscard]] double at(std::size_t layer, std::size_t qubit,
                            RotationAngle angle) const;
    double &at(std::size_t layer, std::size_t qubit, RotationAngle angle);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::span<double> values() { return values_; }

    /// Throws ConfigError unless the shape matches `spec`.
    void checkShape(const CircuitSpec &spec) const;

    bool operator==(const ParameterSet &) const = default;

  private:
    std::size_t num_layers_{0};
    std::size_t num_qubits_{0};
    std::vector<double> values_;
};

void to_json(nlohmann::json &j, const ParameterSet &params);
void from_json(const nlohmann::json &j, ParameterSet &params);

/// Rz(omega) * Ry(theta) * Rz(phi) in closed form; rejects non-finite angles.
Matrix2 rotGate(double phi, double theta, double omega);

/// Rx(x) on every qubit.
void embedInput(StateVector &state, double x);

/// One primitive operation of a compiled circuit.
struct TapeOp {
    enum class Kind { Rx, Ry, Rz, Cnot };
    Kind kind;
    std::size_t qubit;   ///< acted-on qubit, or CNOT control
    std::size_t target;  ///< CNOT target; unused otherwise
    double angle;        ///< rotation angle; unused for CNOT
    long param_index;    ///< flat parameter index, -1 when not trainable
};

/**
 * @brief Flatten (spec, params, x) into primitive operations in application
 * order: embedding, then per layer Rz(phi), Ry(theta), Rz(omega) on every
 * qubit followed by the entangler.
 */
std::vector<TapeOp> compileTape(const CircuitSpec &spec,
                                const ParameterSet &params, double x);

/// Apply one tape operation (or its inverse) to `state`.
void applyTapeOp(StateVector &state, const TapeOp &op, bool inverse = false);

/// |psi> = prod_l (U_ent U_rot^(l)) Embed(x) |0...0>
StateVector forward(const CircuitSpec &spec, const ParameterSet &params,
                    double x);

} // namespace lrpq
