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
#include "lrpq/StateVector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lrpq/Error.hpp"

namespace lrpq {
namespace gates {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Matrix2 rx(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {c, -kI * s, -kI * s, c};
}

Matrix2 ry(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {c, -s, s, c};
}

Matrix2 rz(double angle) {
    return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
}

Matrix2 pauliY() { return {0.0, -kI, kI, 0.0}; }

Matrix2 pauliZ() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix4 cnot() {
    Matrix4 m{};
    m[0 * 4 + 0] = 1.0;
    m[1 * 4 + 1] = 1.0;
    m[2 * 4 + 3] = 1.0;
    m[3 * 4 + 2] = 1.0;
    return m;
}

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint(const Matrix2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
            std::conj(m[3])};
}

double unitarityDeviation(const Matrix2 &m) {
    const Matrix2 p = multiply(adjoint(m), m);
    const Matrix2 id = identity();
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(p[k] - id[k]));
    }
    return worst;
}

} // namespace gates

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_{num_qubits} {
    require<ConfigError>(num_qubits >= 1 && num_qubits <= max_qubits,
                         "number of qubits must be in [1, " +
                             std::to_string(max_qubits) + "], got " +
                             std::to_string(num_qubits));
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::fromAmplitudes(std::vector<Complex> amplitudes) {
    const std::size_t len = amplitudes.size();
    require<ConfigError>(len >= 2 && (len & (len - 1)) == 0,
                         "amplitude count must be a power of two >= 2");
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    require<NumericError>(std::abs(norm - 1.0) < 1e-10,
                          "amplitudes are not normalized");
    StateVector sv;
    sv.num_qubits_ = static_cast<std::size_t>(std::countr_zero(len));
    require<ConfigError>(sv.num_qubits_ <= kMaxQubits, "too many qubits");
    sv.amplitudes_ = std::move(amplitudes);
    return sv;
}

void StateVector::checkQubit(std::size_t qubit) const {
    require<IndexError>(qubit < num_qubits_,
                        "qubit index " + std::to_string(qubit) +
                            " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
}

void StateVector::applyGate(const Matrix2 &gate, std::size_t qubit) {
    checkQubit(qubit);
    require<NumericError>(gates::unitarityDeviation(gate) <=
                              kUnitarityTolerance,
                          "gate is not unitary");
    // Pairs (i, i | mask) with the qubit bit cleared in i, visited block by
    // block so each inner loop is contiguous.
    const std::size_t mask = qubitMask(qubit);
    const std::size_t dim = amplitudes_.size();
    for (std::size_t block = 0; block < dim; block += 2 * mask) {
        for (std::size_t i = block; i < block + mask; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i + mask];
            amplitudes_[i] = gate[0] * a0 + gate[1] * a1;
            amplitudes_[i + mask] = gate[2] * a0 + gate[3] * a1;
        }
    }
}

void StateVector::applyCnot(std::size_t control, std::size_t target) {
    checkQubit(control);
    checkQubit(target);
    require<IndexError>(control != target,
                        "CNOT control and target must differ");
    const std::size_t cmask = qubitMask(control);
    const std::size_t tmask = qubitMask(target);
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tmask]);
        }
    }
}

void StateVector::scaleDiagonal(std::span<const double> weights) {
    require<ConfigError>(weights.size() == amplitudes_.size(),
                         "diagonal weight length mismatch");
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        amplitudes_[i] *= weights[i];
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        probs[i] = std::norm(amplitudes_[i]);
    }
    return probs;
}

double StateVector::expectationZ(std::size_t qubit) const {
    checkQubit(qubit);
    const std::size_t mask = qubitMask(qubit);
    double value = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const double p = std::norm(amplitudes_[i]);
        value += (i & mask) == 0 ? p : -p;
    }
    return value;
}

double StateVector::squaredNorm() const {
    double norm = 0.0;
    for (const auto &a : amplitudes_) {
        norm += std::norm(a);
    }
    return norm;
}

Complex StateVector::braket(const StateVector &bra, const Matrix2 &op,
                            std::size_t qubit) const {
    checkQubit(qubit);
    require<ConfigError>(bra.size() == size(), "braket dimension mismatch");
    const std::size_t mask = qubitMask(qubit);
    const std::size_t dim = amplitudes_.size();
    Complex acc{0.0, 0.0};
    for (std::size_t block = 0; block < dim; block += 2 * mask) {
        for (std::size_t i = block; i < block + mask; ++i) {
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i + mask];
            acc += std::conj(bra.amplitudes_[i]) * (op[0] * a0 + op[1] * a1);
            acc += std::conj(bra.amplitudes_[i + mask]) *
                   (op[2] * a0 + op[3] * a1);
        }
    }
    return acc;
}

} // namespace lrpq
